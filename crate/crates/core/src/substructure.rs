//! Subrng/ideal closure and enumeration, annihilators, radicals, centers,
//! primality predicates, maximal-subring tests, quotient rings, and
//! brute-force unital ring homomorphism search.

use std::collections::BTreeSet;

use crate::abelian::{quotient_group, QuotientGroup};
use crate::algebra::{build_rng, CarrierGroup, FiniteRing, FiniteRng};
use crate::{Caps, Error, Result};

/// A subset of a finite rng's elements, kept sorted; ordering is canonical
/// (cardinality, then lexicographic member list).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementSet {
    members: Vec<usize>,
}

impl ElementSet {
    pub fn new(mut members: Vec<usize>) -> ElementSet {
        members.sort_unstable();
        members.dedup();
        ElementSet { members }
    }

    pub fn singleton(x: usize) -> ElementSet {
        ElementSet { members: vec![x] }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_subset_of(&self, other: &ElementSet) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    pub fn is_zero(&self) -> bool {
        self.members == [0]
    }

    pub fn intersect(&self, other: &ElementSet) -> ElementSet {
        ElementSet {
            members: self.members.iter().copied().filter(|&x| other.contains(x)).collect(),
        }
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        ElementSet::new(self.members.iter().chain(&other.members).copied().collect())
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len().cmp(&other.len()).then_with(|| self.members.cmp(&other.members))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CloseMode {
    Subrng,
    Ideal,
    LeftIdeal,
    RightIdeal,
}

/// Smallest subset containing `seed` closed under the mode's operations.
pub fn close(
    ambient: &FiniteRng,
    seed: &ElementSet,
    mode: CloseMode,
    caps: &Caps,
) -> Result<ElementSet> {
    caps.check_closure(ambient.order())?;
    let n = ambient.order();
    let mut in_set = vec![false; n];
    let mut list: Vec<usize> = Vec::new();
    let mut queue: Vec<usize> = vec![0];
    queue.extend(seed.iter());
    while let Some(x) = queue.pop() {
        if in_set[x] {
            continue;
        }
        in_set[x] = true;
        list.push(x);
        queue.push(ambient.neg(x));
        for i in 0..list.len() {
            let y = list[i];
            queue.push(ambient.add(x, y));
            if mode == CloseMode::Subrng {
                queue.push(ambient.mul(x, y));
                queue.push(ambient.mul(y, x));
            }
        }
        match mode {
            CloseMode::Subrng => {}
            CloseMode::Ideal => {
                for r in ambient.elements() {
                    queue.push(ambient.mul(r, x));
                    queue.push(ambient.mul(x, r));
                }
            }
            CloseMode::LeftIdeal => {
                for r in ambient.elements() {
                    queue.push(ambient.mul(r, x));
                }
            }
            CloseMode::RightIdeal => {
                for r in ambient.elements() {
                    queue.push(ambient.mul(x, r));
                }
            }
        }
    }
    Ok(ElementSet::new(list))
}

/// All two-sided ideals: sum-closure of the principal ideals.
pub fn enumerate_ideals(ring: &FiniteRing, caps: &Caps) -> Result<Vec<ElementSet>> {
    caps.check_closure(ring.order())?;
    let rng = ring.rng();
    let mut found: BTreeSet<ElementSet> = BTreeSet::new();
    for a in ring.elements() {
        found.insert(close(rng, &ElementSet::singleton(a), CloseMode::Ideal, caps)?);
    }
    loop {
        let snapshot: Vec<ElementSet> = found.iter().cloned().collect();
        let before = found.len();
        for (ai, a) in snapshot.iter().enumerate() {
            for b in &snapshot[ai + 1..] {
                if a.is_subset_of(b) || b.is_subset_of(a) {
                    continue;
                }
                let sum: Vec<usize> = a
                    .iter()
                    .flat_map(|x| b.iter().map(move |y| (x, y)))
                    .map(|(x, y)| rng.add(x, y))
                    .collect();
                found.insert(ElementSet::new(sum));
            }
        }
        if found.len() == before {
            break;
        }
    }
    Ok(found.into_iter().collect())
}

/// Elementwise primality: no nonzero a, b with a·S·b = 0.
pub fn is_prime(ring: &FiniteRing) -> bool {
    if ring.order() < 2 {
        return false;
    }
    for a in 1..ring.order() {
        let a_s: Vec<usize> = ring.elements().map(|r| ring.mul(a, r)).collect();
        for b in 1..ring.order() {
            if a_s.iter().all(|&y| ring.mul(y, b) == 0) {
                return false;
            }
        }
    }
    true
}

/// Elementwise semiprimality: no nonzero a with a·S·a = 0.
pub fn is_semiprime(ring: &FiniteRing) -> bool {
    if ring.order() < 2 {
        return false;
    }
    for a in 1..ring.order() {
        if ring.elements().all(|r| ring.mul(ring.mul(a, r), a) == 0) {
            return false;
        }
    }
    true
}

/// Ideal-pair definition of primality, used as an independent oracle.
pub fn is_prime_via_ideals(ring: &FiniteRing, caps: &Caps) -> Result<bool> {
    if ring.order() < 2 {
        return Ok(false);
    }
    let ideals = enumerate_ideals(ring, caps)?;
    for a in ideals.iter().filter(|s| !s.is_zero()) {
        for b in ideals.iter().filter(|s| !s.is_zero()) {
            if a.iter().all(|x| b.iter().all(|y| ring.mul(x, y) == 0)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Ideal definition of semiprimality: no nonzero ideal squares to zero.
pub fn is_semiprime_via_ideals(ring: &FiniteRing, caps: &Caps) -> Result<bool> {
    if ring.order() < 2 {
        return Ok(false);
    }
    let ideals = enumerate_ideals(ring, caps)?;
    for a in ideals.iter().filter(|s| !s.is_zero()) {
        if a.iter().all(|x| a.iter().all(|y| ring.mul(x, y) == 0)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A quotient ring together with the projection/section data.
#[derive(Debug, Clone)]
pub struct QuotientRing {
    pub ring: FiniteRing,
    pub group: QuotientGroup,
}

impl QuotientRing {
    pub fn proj(&self, ambient_idx: usize) -> usize {
        self.group.proj[ambient_idx]
    }

    pub fn section(&self, q_idx: usize) -> usize {
        self.group.section[q_idx]
    }
}

/// Materializes S/N for a two-sided ideal N, with coset representatives
/// chosen by least canonical index.
pub fn quotient_ring(ring: &FiniteRing, ideal: &ElementSet) -> Result<QuotientRing> {
    let group = quotient_group(ring.carrier(), ideal.members());
    let qc = group.carrier.clone();
    let k = qc.rank();
    let mut sc = Vec::with_capacity(k * k);
    for i in 0..k {
        let ri = group.section[qc.basis_elem(i)];
        for j in 0..k {
            let rj = group.section[qc.basis_elem(j)];
            sc.push(group.proj[ring.mul(ri, rj)]);
        }
    }
    let rng = build_rng(qc, sc)?;
    let unity = group.proj[ring.unity()];
    Ok(QuotientRing { ring: FiniteRing::new(rng, unity)?, group })
}

/// Smallest ideal with semiprime quotient: the intersection of all ideals Q
/// with S/Q prime.
pub fn prime_radical(ring: &FiniteRing, caps: &Caps) -> Result<ElementSet> {
    caps.check_closure(ring.order())?;
    let ideals = enumerate_ideals(ring, caps)?;
    let mut acc = ElementSet::new(ring.elements().collect());
    let mut any = false;
    for q in &ideals {
        if q.len() == ring.order() {
            continue;
        }
        let quo = quotient_ring(ring, q)?;
        if is_prime(&quo.ring) {
            acc = acc.intersect(q);
            any = true;
        }
    }
    debug_assert!(any, "a nonzero unital ring has at least one prime ideal");
    Ok(acc)
}

/// The least nonzero ideal, when the ring is subdirectly irreducible.
pub fn little_ideal(ring: &FiniteRing, caps: &Caps) -> Result<Option<ElementSet>> {
    let ideals = enumerate_ideals(ring, caps)?;
    let nonzero: Vec<&ElementSet> = ideals.iter().filter(|s| !s.is_zero()).collect();
    let least = nonzero
        .iter()
        .find(|cand| nonzero.iter().all(|other| cand.is_subset_of(other)));
    Ok(least.map(|s| (*s).clone()))
}

/// {s : sx = xs for all x in X}; the center is the centralizer of the whole
/// ring.
pub fn centralizer(ring: &FiniteRing, x: &ElementSet) -> ElementSet {
    ElementSet::new(
        ring.elements()
            .filter(|&s| x.iter().all(|t| ring.mul(s, t) == ring.mul(t, s)))
            .collect(),
    )
}

pub fn center(ring: &FiniteRing) -> ElementSet {
    centralizer(ring, &ElementSet::new(ring.elements().collect()))
}

/// A unital ring embedding small -> big given by its full element map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddedSubring {
    pub big: FiniteRing,
    pub small: FiniteRing,
    map: Vec<usize>,
}

impl EmbeddedSubring {
    pub fn new(big: FiniteRing, small: FiniteRing, map: Vec<usize>) -> Result<EmbeddedSubring> {
        if map.len() != small.order() {
            return Err(Error::BadEmbedding("map length must equal the small ring's order"));
        }
        if map.iter().any(|&x| x >= big.order()) {
            return Err(Error::BadEmbedding("map image out of range"));
        }
        let mut seen = vec![false; big.order()];
        for &x in &map {
            if seen[x] {
                return Err(Error::BadEmbedding("map is not injective"));
            }
            seen[x] = true;
        }
        if map[small.unity()] != big.unity() {
            return Err(Error::BadEmbedding("map must send unity to unity"));
        }
        for a in small.elements() {
            for b in small.elements() {
                if map[small.add(a, b)] != big.add(map[a], map[b]) {
                    return Err(Error::BadEmbedding("map is not additive"));
                }
                if map[small.mul(a, b)] != big.mul(map[a], map[b]) {
                    return Err(Error::BadEmbedding("map is not multiplicative"));
                }
            }
        }
        Ok(EmbeddedSubring { big, small, map })
    }

    pub fn apply(&self, small_idx: usize) -> usize {
        self.map[small_idx]
    }

    pub fn image(&self) -> ElementSet {
        ElementSet::new(self.map.clone())
    }

    /// Index in the small ring of a big element lying in the image.
    pub fn preimage(&self, big_idx: usize) -> Option<usize> {
        self.map.iter().position(|&x| x == big_idx)
    }
}

/// True iff adjoining any single outside element generates all of `big`.
pub fn is_maximal_subring(emb: &EmbeddedSubring, caps: &Caps) -> Result<bool> {
    caps.check_closure(emb.big.order())?;
    let image = emb.image();
    for s in emb.big.elements() {
        if image.contains(s) {
            continue;
        }
        let gen = close(emb.big.rng(), &image.union(&ElementSet::singleton(s)), CloseMode::Subrng, caps)?;
        if gen.len() != emb.big.order() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// DFS over basis images: all unital ring homomorphisms small -> big as full
/// element maps. `stop_after` bounds the number of maps collected.
pub fn unital_ring_homs(
    small: &FiniteRing,
    big: &FiniteRing,
    stop_after: Option<usize>,
) -> Vec<Vec<usize>> {
    let k = small.rank();
    let carrier = small.carrier();
    let candidates: Vec<Vec<usize>> = (0..k)
        .map(|i| {
            let d = carrier.orders()[i] as u64;
            big.elements()
                .filter(|&x| d % big.carrier().elem_order(x) == 0)
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut images = vec![0usize; k];
    dfs_ring_hom(small, big, &candidates, &mut images, 0, &mut out, stop_after);
    out
}

fn dfs_ring_hom(
    small: &FiniteRing,
    big: &FiniteRing,
    candidates: &[Vec<usize>],
    images: &mut Vec<usize>,
    depth: usize,
    out: &mut Vec<Vec<usize>>,
    stop_after: Option<usize>,
) {
    if stop_after.map_or(false, |cap| out.len() >= cap) {
        return;
    }
    let k = small.rank();
    if depth == k {
        let map = extend_additive(small.carrier(), big.rng(), images);
        if map[small.unity()] != big.unity() {
            return;
        }
        for i in 0..k {
            let ei = small.carrier().basis_elem(i);
            for j in 0..k {
                let ej = small.carrier().basis_elem(j);
                if map[small.mul(ei, ej)] != big.mul(map[ei], map[ej]) {
                    return;
                }
            }
        }
        out.push(map);
        return;
    }
    for &cand in &candidates[depth] {
        images[depth] = cand;
        // partial multiplicativity pruning on pairs fully determined so far
        if partial_mult_ok(small, big, images, depth) {
            dfs_ring_hom(small, big, candidates, images, depth + 1, out, stop_after);
        }
    }
}

fn partial_mult_ok(small: &FiniteRing, big: &FiniteRing, images: &[usize], depth: usize) -> bool {
    let carrier = small.carrier();
    for i in 0..=depth {
        let ei = carrier.basis_elem(i);
        for j in 0..=depth {
            let ej = carrier.basis_elem(j);
            let prod = small.mul(ei, ej);
            let Some(lhs) = partial_apply(carrier, big.rng(), images, depth, prod) else {
                continue;
            };
            if lhs != big.mul(images[i], images[j]) {
                return false;
            }
        }
    }
    true
}

/// Evaluates the additive extension of partial basis images; `None` when the
/// argument involves a basis coordinate not yet assigned.
fn partial_apply(
    carrier: &CarrierGroup,
    big: &FiniteRng,
    images: &[usize],
    depth: usize,
    x: usize,
) -> Option<usize> {
    let coords = carrier.coords_of(x);
    let mut acc = 0usize;
    for (i, &c) in coords.iter().enumerate() {
        if c == 0 {
            continue;
        }
        if i > depth {
            return None;
        }
        acc = big.add(acc, big.carrier().scalar(c as u64, images[i]));
    }
    Some(acc)
}

/// Additive extension of full basis images to an element map.
pub fn extend_additive(carrier: &CarrierGroup, big: &FiniteRng, images: &[usize]) -> Vec<usize> {
    (0..carrier.order())
        .map(|x| {
            let coords = carrier.coords_of(x);
            let mut acc = 0usize;
            for (i, &c) in coords.iter().enumerate() {
                if c != 0 {
                    acc = big.add(acc, big.carrier().scalar(c as u64, images[i]));
                }
            }
            acc
        })
        .collect()
}

/// First unital ring isomorphism in canonical search order, if any.
pub fn ring_isomorphism(a: &FiniteRing, b: &FiniteRing) -> Option<Vec<usize>> {
    if a.order() != b.order() {
        return None;
    }
    unital_ring_homs(a, b, None)
        .into_iter()
        .find(|map| is_bijective(map, b.order()))
}

pub fn ring_isomorphic(a: &FiniteRing, b: &FiniteRing) -> bool {
    ring_isomorphism(a, b).is_some()
}

/// First unital ring embedding small -> big in canonical search order.
pub fn find_unital_embedding(small: &FiniteRing, big: &FiniteRing) -> Option<EmbeddedSubring> {
    unital_ring_homs(small, big, None)
        .into_iter()
        .find(|map| {
            let mut seen = vec![false; big.order()];
            map.iter().all(|&x| !std::mem::replace(&mut seen[x], true))
        })
        .map(|map| EmbeddedSubring::new(big.clone(), small.clone(), map).expect("validated hom"))
}

pub fn is_bijective(map: &[usize], target_order: usize) -> bool {
    if map.len() != target_order {
        return false;
    }
    let mut seen = vec![false; target_order];
    map.iter().all(|&x| !std::mem::replace(&mut seen[x], true))
}

/// True iff `m` is a maximal (proper) ideal of the ring, judged against the
/// complete ideal list.
pub fn is_maximal_ideal(ring: &FiniteRing, m: &ElementSet, caps: &Caps) -> Result<bool> {
    if m.len() == ring.order() {
        return Ok(false);
    }
    let ideals = enumerate_ideals(ring, caps)?;
    Ok(ideals.iter().all(|n| {
        !(m.is_subset_of(n) && n != m && n.len() != ring.order())
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog as cat;
    use proptest::prelude::*;

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn zmod12_has_one_ideal_per_divisor() {
        let z12 = cat::zmod(12).unwrap();
        let ideals = enumerate_ideals(&z12, &caps()).unwrap();
        assert_eq!(ideals.len(), 6);
        let quo = quotient_ring(&z12, &ElementSet::new(vec![0, 4, 8])).unwrap();
        assert!(ring_isomorphic(&quo.ring, &cat::zmod(4).unwrap()));
    }

    #[test]
    fn primality_matches_the_ideal_quantifier_oracle() {
        let f2 = cat::gf(2).unwrap();
        let rings = vec![
            f2.clone(),
            cat::zmod(4).unwrap(),
            cat::product_ring(&[f2.clone(), f2]).unwrap(),
            cat::tri(2, 2).unwrap(),
            cat::mat(2, 2).unwrap(),
        ];
        for r in rings {
            assert_eq!(is_prime(&r), is_prime_via_ideals(&r, &caps()).unwrap());
            assert_eq!(is_semiprime(&r), is_semiprime_via_ideals(&r, &caps()).unwrap());
        }
    }

    #[test]
    fn radicals_and_little_ideals() {
        let t2 = cat::tri(2, 2).unwrap();
        let rad = prime_radical(&t2, &caps()).unwrap();
        assert_eq!(rad.len(), 2); // the strictly upper-triangular part
        let z4 = cat::zmod(4).unwrap();
        assert_eq!(prime_radical(&z4, &caps()).unwrap().members(), [0, 2]);
        let m2 = cat::mat(2, 2).unwrap();
        assert!(prime_radical(&m2, &caps()).unwrap().is_zero());
        assert_eq!(little_ideal(&z4, &caps()).unwrap().unwrap().members(), [0, 2]);
        assert_eq!(little_ideal(&m2, &caps()).unwrap().unwrap().len(), 16);
        let f2 = cat::gf(2).unwrap();
        let f2xf2 = cat::product_ring(&[f2.clone(), f2]).unwrap();
        assert!(little_ideal(&f2xf2, &caps()).unwrap().is_none());
    }

    #[test]
    fn matrix_center_is_the_scalars() {
        let m2 = cat::mat(2, 2).unwrap();
        let z = center(&m2);
        assert_eq!(z.members(), [0, m2.unity()]);
    }

    #[test]
    fn f4_embeds_in_m2f2_in_exactly_two_ways() {
        let f4 = cat::gf(4).unwrap();
        let m2 = cat::mat(2, 2).unwrap();
        let homs = unital_ring_homs(&f4, &m2, None);
        assert_eq!(homs.len(), 2);
        for h in &homs {
            let mut seen = std::collections::BTreeSet::new();
            assert!(h.iter().all(|&x| seen.insert(x)), "field homs are injective");
        }
    }

    #[test]
    fn isomorphism_distinguishes_the_order_4_rings() {
        let z4 = cat::zmod(4).unwrap();
        let f4 = cat::gf(4).unwrap();
        assert!(!ring_isomorphic(&z4, &f4));
        assert!(ring_isomorphic(&f4, &cat::gf(4).unwrap()));
    }

    #[test]
    fn embedding_validation_rejects_a_broken_map() {
        let f2 = cat::gf(2).unwrap();
        let f4 = cat::gf(4).unwrap();
        assert!(find_unital_embedding(&f2, &f4).is_some());
        let bad = EmbeddedSubring::new(f4.clone(), f2.clone(), vec![0, 0]);
        assert!(matches!(bad, Err(Error::BadEmbedding(_))));
    }

    #[test]
    fn maximality_of_field_extensions_and_a_triple_diagonal() {
        let f2 = cat::gf(2).unwrap();
        let f8 = cat::gf(8).unwrap();
        let emb = find_unital_embedding(&f2, &f8).unwrap();
        assert!(is_maximal_subring(&emb, &caps()).unwrap());
        let cube = cat::product_ring(&[f2.clone(), f2.clone(), f2.clone()]).unwrap();
        let diag = EmbeddedSubring::new(cube.clone(), f2.clone(), vec![0, cube.unity()]).unwrap();
        assert!(!is_maximal_subring(&diag, &caps()).unwrap());
    }

    #[test]
    fn maximal_ideals_of_zmod12() {
        let z12 = cat::zmod(12).unwrap();
        let two = close(z12.rng(), &ElementSet::singleton(2), CloseMode::Ideal, &caps()).unwrap();
        let four = close(z12.rng(), &ElementSet::singleton(4), CloseMode::Ideal, &caps()).unwrap();
        assert!(is_maximal_ideal(&z12, &two, &caps()).unwrap());
        assert!(!is_maximal_ideal(&z12, &four, &caps()).unwrap());
    }

    proptest! {
        #[test]
        fn closure_is_idempotent_and_monotone(seed in proptest::collection::vec(0usize..8, 0..4)) {
            let t2 = cat::tri(2, 2).unwrap();
            let s = ElementSet::new(seed);
            for mode in [CloseMode::Subrng, CloseMode::Ideal, CloseMode::LeftIdeal, CloseMode::RightIdeal] {
                let c = close(t2.rng(), &s, mode, &caps()).unwrap();
                prop_assert!(s.is_subset_of(&c));
                prop_assert_eq!(close(t2.rng(), &c, mode, &caps()).unwrap(), c);
            }
        }
    }
}
