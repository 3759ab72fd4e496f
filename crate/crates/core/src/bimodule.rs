//! Bimodule-rngs over a finite ring: validation of the action axioms,
//! annihilators, minimality, Hom-set enumeration, isomorphism testing, and
//! the three-type stratification of minimal instances.

use std::collections::{BTreeSet, HashMap};

use crate::abelian::subgroup_decomposition;
use crate::algebra::{build_rng, CarrierGroup, FiniteRing, FiniteRng};
use crate::substructure::{extend_additive, is_bijective, ElementSet, QuotientRing};
use crate::{Caps, Error, Result};

const ACTION_TABLE_CAP: usize = 1 << 22;

/// A rng `I` with a compatible unital two-sided action of a ring `R`, all
/// given by basis tables and extended bilinearly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RRng {
    ring: FiniteRing,
    i_rng: FiniteRng,
    /// R-basis × I-basis -> I element
    lact: Vec<usize>,
    /// I-basis × R-basis -> I element
    ract: Vec<usize>,
    lact_full: Option<Box<[u32]>>,
    ract_full: Option<Box<[u32]>>,
}

impl RRng {
    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn i_rng(&self) -> &FiniteRng {
        &self.i_rng
    }

    pub fn i_order(&self) -> usize {
        self.i_rng.order()
    }

    pub fn is_zero(&self) -> bool {
        self.i_order() == 1
    }

    pub fn lact_basis(&self, r_basis: usize, i_basis: usize) -> usize {
        self.lact[r_basis * self.i_rng.rank() + i_basis]
    }

    pub fn ract_basis(&self, i_basis: usize, r_basis: usize) -> usize {
        self.ract[i_basis * self.ring.rank() + r_basis]
    }

    pub fn act_left(&self, r: usize, x: usize) -> usize {
        match &self.lact_full {
            Some(t) => t[r * self.i_order() + x] as usize,
            None => self.act_left_bilinear(r, x),
        }
    }

    pub fn act_right(&self, x: usize, r: usize) -> usize {
        match &self.ract_full {
            Some(t) => t[x * self.ring.order() + r] as usize,
            None => self.act_right_bilinear(x, r),
        }
    }

    fn act_left_bilinear(&self, r: usize, x: usize) -> usize {
        let rc = self.ring.carrier().coords_of(r);
        let xc = self.i_rng.carrier().coords_of(x);
        let mut acc = 0usize;
        for (i, &ri) in rc.iter().enumerate() {
            if ri == 0 {
                continue;
            }
            for (j, &xj) in xc.iter().enumerate() {
                if xj == 0 {
                    continue;
                }
                let t = self.lact_basis(i, j);
                if t != 0 {
                    acc = self.i_rng.add(acc, self.i_rng.carrier().scalar(ri as u64 * xj as u64, t));
                }
            }
        }
        acc
    }

    fn act_right_bilinear(&self, x: usize, r: usize) -> usize {
        let xc = self.i_rng.carrier().coords_of(x);
        let rc = self.ring.carrier().coords_of(r);
        let mut acc = 0usize;
        for (i, &xi) in xc.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &rj) in rc.iter().enumerate() {
                if rj == 0 {
                    continue;
                }
                let t = self.ract_basis(i, j);
                if t != 0 {
                    acc = self.i_rng.add(acc, self.i_rng.carrier().scalar(xi as u64 * rj as u64, t));
                }
            }
        }
        acc
    }

    /// True iff the internal product is identically zero.
    pub fn has_zero_product(&self) -> bool {
        let k = self.i_rng.rank();
        (0..k).all(|i| (0..k).all(|j| self.i_rng.basis_product(i, j) == 0))
    }

    /// The same bimodule with the internal product replaced by zero.
    pub fn zero_product_variant(&self) -> RRng {
        let k = self.i_rng.rank();
        let i_rng = build_rng(self.i_rng.carrier().clone(), vec![0; k * k])
            .expect("zero product is associative");
        validate_rrng(self.ring.clone(), i_rng, self.lact.clone(), self.ract.clone())
            .expect("dropping the product preserves the module axioms")
    }
}

/// Validates the bimodule-rng axioms on basis tuples (sufficient by
/// bilinearity) and builds the action tables.
pub fn validate_rrng(
    ring: FiniteRing,
    i_rng: FiniteRng,
    lact: Vec<usize>,
    ract: Vec<usize>,
) -> Result<RRng> {
    let kr = ring.rank();
    let ki = i_rng.rank();
    if lact.len() != kr * ki {
        return Err(Error::DimensionMismatch { expected: kr * ki, got: lact.len() });
    }
    if ract.len() != ki * kr {
        return Err(Error::DimensionMismatch { expected: ki * kr, got: ract.len() });
    }
    for &e in lact.iter().chain(&ract) {
        if e >= i_rng.order() {
            return Err(Error::ElementOutOfRange { idx: e, order: i_rng.order() });
        }
    }
    // well-definedness of the bilinear extension
    for i in 0..kr {
        for j in 0..ki {
            let o = i_rng.carrier().elem_order(lact[i * ki + j]);
            if ring.carrier().orders()[i] as u64 % o != 0
                || i_rng.carrier().orders()[j] as u64 % o != 0
            {
                return Err(Error::AxiomViolation { axiom: "left-action-bilinear", tuple: vec![i, j] });
            }
        }
    }
    for i in 0..ki {
        for j in 0..kr {
            let o = i_rng.carrier().elem_order(ract[i * kr + j]);
            if i_rng.carrier().orders()[i] as u64 % o != 0
                || ring.carrier().orders()[j] as u64 % o != 0
            {
                return Err(Error::AxiomViolation { axiom: "right-action-bilinear", tuple: vec![i, j] });
            }
        }
    }
    let mut m = RRng { ring, i_rng, lact, ract, lact_full: None, ract_full: None };

    let one = m.ring.unity();
    for j in 0..ki {
        let x = m.i_rng.carrier().basis_elem(j);
        if m.act_left_bilinear(one, x) != x {
            return Err(Error::AxiomViolation { axiom: "left-unital", tuple: vec![j] });
        }
        if m.act_right_bilinear(x, one) != x {
            return Err(Error::AxiomViolation { axiom: "right-unital", tuple: vec![j] });
        }
    }
    for i in 0..kr {
        let ri = m.ring.carrier().basis_elem(i);
        for j in 0..kr {
            let rj = m.ring.carrier().basis_elem(j);
            let rij = m.ring.mul(ri, rj);
            for l in 0..ki {
                let x = m.i_rng.carrier().basis_elem(l);
                if m.act_left_bilinear(rij, x)
                    != m.act_left_bilinear(ri, m.act_left_bilinear(rj, x))
                {
                    return Err(Error::AxiomViolation { axiom: "left-associative", tuple: vec![i, j, l] });
                }
                if m.act_right_bilinear(m.act_right_bilinear(x, ri), rj)
                    != m.act_right_bilinear(x, rij)
                {
                    return Err(Error::AxiomViolation { axiom: "right-associative", tuple: vec![i, j, l] });
                }
            }
        }
        for l in 0..ki {
            let x = m.i_rng.carrier().basis_elem(l);
            for j in 0..kr {
                let rj = m.ring.carrier().basis_elem(j);
                if m.act_right_bilinear(m.act_left_bilinear(ri, x), rj)
                    != m.act_left_bilinear(ri, m.act_right_bilinear(x, rj))
                {
                    return Err(Error::AxiomViolation { axiom: "middle-associative", tuple: vec![i, l, j] });
                }
            }
        }
    }
    for r in 0..kr {
        let er = m.ring.carrier().basis_elem(r);
        for i in 0..ki {
            let x = m.i_rng.carrier().basis_elem(i);
            for j in 0..ki {
                let y = m.i_rng.carrier().basis_elem(j);
                let xy = m.i_rng.mul(x, y);
                if m.act_left_bilinear(er, xy) != m.i_rng.mul(m.act_left_bilinear(er, x), y) {
                    return Err(Error::AxiomViolation { axiom: "compat-left", tuple: vec![r, i, j] });
                }
                if m.i_rng.mul(x, m.act_left_bilinear(er, y))
                    != m.i_rng.mul(m.act_right_bilinear(x, er), y)
                {
                    return Err(Error::AxiomViolation { axiom: "compat-middle", tuple: vec![r, i, j] });
                }
                if m.act_right_bilinear(xy, er) != m.i_rng.mul(x, m.act_right_bilinear(y, er)) {
                    return Err(Error::AxiomViolation { axiom: "compat-right", tuple: vec![r, i, j] });
                }
            }
        }
    }
    build_action_tables(&mut m);
    Ok(m)
}

fn build_action_tables(m: &mut RRng) {
    let (nr, ni) = (m.ring.order(), m.i_order());
    if nr * ni > ACTION_TABLE_CAP {
        return;
    }
    let mut l = vec![0u32; nr * ni];
    let mut r = vec![0u32; ni * nr];
    for a in 0..nr {
        for x in 0..ni {
            l[a * ni + x] = m.act_left_bilinear(a, x) as u32;
            r[x * nr + a] = m.act_right_bilinear(x, a) as u32;
        }
    }
    m.lact_full = Some(l.into_boxed_slice());
    m.ract_full = Some(r.into_boxed_slice());
}

/// The right, left, and two-sided annihilators of `I` in `R`; each is a
/// two-sided ideal of `R`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnihilatorTriple {
    /// {r in R : I·r = 0}
    pub right: ElementSet,
    /// {r in R : r·I = 0}
    pub left: ElementSet,
    /// right ∩ left
    pub two_sided: ElementSet,
}

pub fn annihilators(m: &RRng) -> AnnihilatorTriple {
    let right = ElementSet::new(
        m.ring()
            .elements()
            .filter(|&r| (0..m.i_order()).all(|x| m.act_right(x, r) == 0))
            .collect(),
    );
    let left = ElementSet::new(
        m.ring()
            .elements()
            .filter(|&r| (0..m.i_order()).all(|x| m.act_left(r, x) == 0))
            .collect(),
    );
    let two_sided = right.intersect(&left);
    AnnihilatorTriple { right, left, two_sided }
}

/// Closure of a seed under addition, negation, the internal product, and
/// both R-actions (basis actions suffice by bilinearity).
pub fn r_subrng_closure(m: &RRng, seed: &ElementSet) -> ElementSet {
    let n = m.i_order();
    let mut in_set = vec![false; n];
    let mut list: Vec<usize> = Vec::new();
    let mut queue: Vec<usize> = vec![0];
    queue.extend(seed.iter());
    let kr = m.ring().rank();
    while let Some(x) = queue.pop() {
        if in_set[x] {
            continue;
        }
        in_set[x] = true;
        list.push(x);
        queue.push(m.i_rng().neg(x));
        for i in 0..list.len() {
            let y = list[i];
            queue.push(m.i_rng().add(x, y));
            queue.push(m.i_rng().mul(x, y));
            queue.push(m.i_rng().mul(y, x));
        }
        for b in 0..kr {
            let e = m.ring().carrier().basis_elem(b);
            queue.push(m.act_left(e, x));
            queue.push(m.act_right(x, e));
        }
    }
    ElementSet::new(list)
}

/// All R-subrngs of `I`: closures of singletons, then a pairwise-join
/// fixpoint.
pub fn enumerate_r_subrngs(m: &RRng, caps: &Caps) -> Result<Vec<ElementSet>> {
    caps.check_closure(m.i_order())?;
    let mut found: BTreeSet<ElementSet> = BTreeSet::new();
    for x in 0..m.i_order() {
        found.insert(r_subrng_closure(m, &ElementSet::singleton(x)));
    }
    loop {
        let snapshot: Vec<ElementSet> = found.iter().cloned().collect();
        let before = found.len();
        for (ai, a) in snapshot.iter().enumerate() {
            for b in &snapshot[ai + 1..] {
                if a.is_subset_of(b) || b.is_subset_of(a) {
                    continue;
                }
                found.insert(r_subrng_closure(m, &a.union(b)));
            }
        }
        if found.len() == before {
            break;
        }
    }
    Ok(found.into_iter().collect())
}

/// A proper nonzero R-subrng, if one exists; `None` means the bimodule-rng
/// is minimal (every nonzero element generates it).
pub fn minimality_witness(m: &RRng) -> Result<Option<ElementSet>> {
    if m.is_zero() {
        return Err(Error::ZeroRng);
    }
    for x in 1..m.i_order() {
        let c = r_subrng_closure(m, &ElementSet::singleton(x));
        if c.len() != m.i_order() {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

pub fn is_minimal_rrng(m: &RRng) -> Result<bool> {
    Ok(minimality_witness(m)?.is_none())
}

/// A homomorphism of bimodule-rngs, recorded as the images of the source
/// carrier basis plus the induced full element map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RHom {
    pub images: Vec<usize>,
    pub map: Vec<usize>,
}

impl RHom {
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn is_zero(&self) -> bool {
        self.map.iter().all(|&y| y == 0)
    }

    pub fn is_bijection(&self, target_order: usize) -> bool {
        is_bijective(&self.map, target_order)
    }
}

/// Whether `enumerate_rhoms` filters on multiplicativity (bimodule-rng
/// homomorphisms) or only on the bimodule structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HomKind {
    RngHom,
    BimoduleHom,
}

/// All homomorphisms source -> target over the same base ring, found by
/// assigning basis images one at a time with incremental constraint checks.
pub fn enumerate_rhoms(src: &RRng, dst: &RRng, caps: &Caps) -> Result<Vec<RHom>> {
    enumerate_homs(src, dst, HomKind::RngHom, None, caps)
}

pub fn enumerate_homs(
    src: &RRng,
    dst: &RRng,
    kind: HomKind,
    stop_after: Option<usize>,
    caps: &Caps,
) -> Result<Vec<RHom>> {
    if src.ring() != dst.ring() {
        return Err(Error::PreconditionViolated("hom search requires a common base ring"));
    }
    caps.check_enumeration(src.i_order().max(dst.i_order()))?;
    let k = src.i_rng().rank();
    let candidates: Vec<Vec<usize>> = (0..k)
        .map(|j| {
            let d = src.i_rng().carrier().orders()[j] as u64;
            (0..dst.i_order())
                .filter(|&y| d % dst.i_rng().carrier().elem_order(y) == 0)
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut images = vec![0usize; k];
    hom_dfs(src, dst, kind, &candidates, &mut images, 0, &mut out, stop_after);
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn hom_dfs(
    src: &RRng,
    dst: &RRng,
    kind: HomKind,
    candidates: &[Vec<usize>],
    images: &mut Vec<usize>,
    depth: usize,
    out: &mut Vec<RHom>,
    stop_after: Option<usize>,
) {
    if stop_after.map_or(false, |cap| out.len() >= cap) {
        return;
    }
    let k = src.i_rng().rank();
    if depth == k {
        if hom_constraints_ok(src, dst, kind, images, k) {
            let map = extend_additive(src.i_rng().carrier(), dst.i_rng(), images);
            out.push(RHom { images: images.clone(), map });
        }
        return;
    }
    for &cand in &candidates[depth] {
        images[depth] = cand;
        if hom_constraints_ok(src, dst, kind, images, depth + 1) {
            hom_dfs(src, dst, kind, candidates, images, depth + 1, out, stop_after);
        }
    }
}

/// Checks all constraints whose arguments are determined by the first
/// `assigned` basis images; partial applications that need later basis
/// coordinates are deferred.
fn hom_constraints_ok(src: &RRng, dst: &RRng, kind: HomKind, images: &[usize], assigned: usize) -> bool {
    let ic = src.i_rng().carrier();
    let kr = src.ring().rank();
    let papply = |x: usize| partial_apply_i(ic, dst.i_rng(), images, assigned, x);
    for j in 0..assigned {
        let ej = ic.basis_elem(j);
        let fj = images[j];
        for r in 0..kr {
            let er = src.ring().carrier().basis_elem(r);
            if let Some(lhs) = papply(src.act_left(er, ej)) {
                if lhs != dst.act_left(er, fj) {
                    return false;
                }
            }
            if let Some(lhs) = papply(src.act_right(ej, er)) {
                if lhs != dst.act_right(fj, er) {
                    return false;
                }
            }
        }
        if kind == HomKind::RngHom {
            for l in 0..assigned {
                let el = ic.basis_elem(l);
                if let Some(lhs) = papply(src.i_rng().mul(ej, el)) {
                    if lhs != dst.i_rng().mul(fj, images[l]) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn partial_apply_i(
    carrier: &CarrierGroup,
    dst: &FiniteRng,
    images: &[usize],
    assigned: usize,
    x: usize,
) -> Option<usize> {
    let coords = carrier.coords_of(x);
    let mut acc = 0usize;
    for (i, &c) in coords.iter().enumerate() {
        if c == 0 {
            continue;
        }
        if i >= assigned {
            return None;
        }
        acc = dst.add(acc, dst.carrier().scalar(c as u64, images[i]));
    }
    Some(acc)
}

/// True iff a nonzero homomorphism source -> target exists.
pub fn exists_nonzero_rhom(src: &RRng, dst: &RRng, caps: &Caps) -> Result<bool> {
    // the zero map is always found first in canonical search order
    let homs = enumerate_homs(src, dst, HomKind::RngHom, Some(2), caps)?;
    Ok(homs.len() > 1)
}

/// First bijective homomorphism in canonical search order, if any.
pub fn r_isomorphism(a: &RRng, b: &RRng, kind: HomKind, caps: &Caps) -> Result<Option<RHom>> {
    if a.i_order() != b.i_order() {
        return Ok(None);
    }
    let homs = enumerate_homs(a, b, kind, None, caps)?;
    Ok(homs.into_iter().find(|h| h.is_bijection(b.i_order())))
}

pub fn r_isomorphic(a: &RRng, b: &RRng, caps: &Caps) -> Result<bool> {
    Ok(r_isomorphism(a, b, HomKind::RngHom, caps)?.is_some())
}

/// Elementwise verification that a full map is a bimodule-rng homomorphism.
pub fn is_rhom_map(src: &RRng, dst: &RRng, map: &[usize], kind: HomKind) -> bool {
    if map.len() != src.i_order() {
        return false;
    }
    let kr = src.ring().rank();
    for x in 0..src.i_order() {
        for y in 0..src.i_order() {
            if map[src.i_rng().add(x, y)] != dst.i_rng().add(map[x], map[y]) {
                return false;
            }
            if kind == HomKind::RngHom && map[src.i_rng().mul(x, y)] != dst.i_rng().mul(map[x], map[y]) {
                return false;
            }
        }
        for r in 0..kr {
            let er = src.ring().carrier().basis_elem(r);
            if map[src.act_left(er, x)] != dst.act_left(er, map[x]) {
                return false;
            }
            if map[src.act_right(x, er)] != dst.act_right(map[x], er) {
                return false;
            }
        }
    }
    true
}

/// The three-type stratification of a minimal bimodule-rng.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RrngType {
    /// zero internal product
    T1,
    /// nonzero product, no nonzero hom into R/ann
    T2,
    /// a nonzero hom into R/ann exists
    T3,
}

impl std::fmt::Display for RrngType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RrngType::T1 => write!(f, "T1"),
            RrngType::T2 => write!(f, "T2"),
            RrngType::T3 => write!(f, "T3"),
        }
    }
}

pub fn rrng_type(m: &RRng, caps: &Caps) -> Result<RrngType> {
    if let Some(w) = minimality_witness(m)? {
        return Err(Error::NotMinimal { witness_size: w.len() });
    }
    if m.has_zero_product() {
        return Ok(RrngType::T1);
    }
    let ann = annihilators(m).two_sided;
    let (quot, _) = quotient_rrng(m.ring(), &ann)?;
    if exists_nonzero_rhom(m, &quot, caps)? {
        Ok(RrngType::T3)
    } else {
        Ok(RrngType::T2)
    }
}

/// R/Z as a bimodule-rng over R, acting through the quotient map.
pub fn quotient_rrng(ring: &FiniteRing, z: &ElementSet) -> Result<(RRng, QuotientRing)> {
    let quo = crate::substructure::quotient_ring(ring, z)?;
    let kr = ring.rank();
    let ki = quo.ring.rank();
    let mut lact = Vec::with_capacity(kr * ki);
    for i in 0..kr {
        let ri = ring.carrier().basis_elem(i);
        for j in 0..ki {
            let xj = quo.section(quo.ring.carrier().basis_elem(j));
            lact.push(quo.proj(ring.mul(ri, xj)));
        }
    }
    let mut ract = Vec::with_capacity(ki * kr);
    for j in 0..ki {
        let xj = quo.section(quo.ring.carrier().basis_elem(j));
        for i in 0..kr {
            let ri = ring.carrier().basis_elem(i);
            ract.push(quo.proj(ring.mul(xj, ri)));
        }
    }
    let m = validate_rrng(ring.clone(), quo.ring.rng().clone(), lact, ract)?;
    Ok((m, quo))
}

/// R itself as the regular bimodule-rng.
pub fn regular_rrng(ring: &FiniteRing) -> RRng {
    let k = ring.rank();
    let mut tbl = Vec::with_capacity(k * k);
    for i in 0..k {
        for j in 0..k {
            tbl.push(ring.rng().basis_product(i, j));
        }
    }
    validate_rrng(ring.clone(), ring.rng().clone(), tbl.clone(), tbl)
        .expect("regular actions satisfy the axioms")
}

/// A multiplicatively closed, R-invariant subset of an ambient rng as a
/// standalone bimodule-rng; `map` embeds R's elements into the ambient rng.
/// Also returns the additive embedding: new carrier index -> ambient index.
pub fn rrng_from_invariant_set(
    ring: &FiniteRing,
    ambient: &FiniteRng,
    map: &[usize],
    members: &ElementSet,
) -> Result<(RRng, Vec<usize>)> {
    let additively_closed = members.contains(0)
        && members
            .iter()
            .all(|x| members.iter().all(|y| members.contains(ambient.add(x, y))));
    if !additively_closed {
        return Err(Error::PreconditionViolated("subset is not an additive subgroup"));
    }
    let sub = subgroup_decomposition(ambient.carrier(), members.members());
    let back: HashMap<usize, usize> =
        sub.embed.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let lookup = |x: usize| -> Result<usize> {
        back.get(&x).copied().ok_or(Error::PreconditionViolated(
            "subset is not closed under the required products",
        ))
    };
    let ki = sub.carrier.rank();
    let kr = ring.rank();
    let mut sc = Vec::with_capacity(ki * ki);
    for i in 0..ki {
        let xi = sub.embed[sub.carrier.basis_elem(i)];
        for j in 0..ki {
            let xj = sub.embed[sub.carrier.basis_elem(j)];
            sc.push(lookup(ambient.mul(xi, xj))?);
        }
    }
    let i_rng = build_rng(sub.carrier.clone(), sc)?;
    let mut lact = Vec::with_capacity(kr * ki);
    for r in 0..kr {
        let er = map[ring.carrier().basis_elem(r)];
        for j in 0..ki {
            let xj = sub.embed[sub.carrier.basis_elem(j)];
            lact.push(lookup(ambient.mul(er, xj))?);
        }
    }
    let mut ract = Vec::with_capacity(ki * kr);
    for j in 0..ki {
        let xj = sub.embed[sub.carrier.basis_elem(j)];
        for r in 0..kr {
            let er = map[ring.carrier().basis_elem(r)];
            ract.push(lookup(ambient.mul(xj, er))?);
        }
    }
    let m = validate_rrng(ring.clone(), i_rng, lact, ract)?;
    Ok((m, sub.embed))
}

/// An ideal of R, with the inherited actions, as a bimodule-rng.
pub fn rrng_from_ideal(ring: &FiniteRing, members: &ElementSet) -> Result<(RRng, Vec<usize>)> {
    let identity: Vec<usize> = ring.elements().collect();
    rrng_from_invariant_set(ring, ring.rng(), &identity, members)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog as cat;

    fn caps() -> Caps {
        Caps::default()
    }

    /// F_4 with the scalar F_2-action only.
    fn f4_over_f2() -> RRng {
        let f2 = cat::gf(2).unwrap();
        let f4 = cat::gf(4).unwrap();
        let acts: Vec<usize> = (0..f4.rank()).map(|j| f4.carrier().basis_elem(j)).collect();
        validate_rrng(f2, f4.rng().clone(), acts.clone(), acts).unwrap()
    }

    #[test]
    fn regular_bimodule_over_a_field_is_minimal() {
        let f4 = cat::gf(4).unwrap();
        assert!(is_minimal_rrng(&regular_rrng(&f4)).unwrap());
        assert!(minimality_witness(&regular_rrng(&f4)).unwrap().is_none());
    }

    #[test]
    fn scalar_restriction_breaks_minimality() {
        let m = f4_over_f2();
        let w = minimality_witness(&m).unwrap().expect("F_2 is a proper invariant subrng");
        assert_eq!(w.len(), 2);
        assert_eq!(enumerate_r_subrngs(&m, &caps()).unwrap().len(), 3);
    }

    #[test]
    fn validation_rejects_a_non_unital_right_action() {
        let z4 = cat::zmod(4).unwrap();
        let lact = vec![1usize]; // basis action 1·1 = 1
        let ract = vec![0usize]; // basis action 1·1 = 0, so x·1 = 0
        let err = validate_rrng(z4.clone(), z4.rng().clone(), lact, ract).unwrap_err();
        assert!(matches!(err, Error::AxiomViolation { .. }));
    }

    #[test]
    fn hom_kinds_differ_when_multiplicativity_bites() {
        let f2 = cat::gf(2).unwrap();
        let zero = cat::zero_bimodule(&f2, 0, &caps()).unwrap();
        let reg = regular_rrng(&f2);
        let rng_homs = enumerate_homs(&zero, &reg, HomKind::RngHom, None, &caps()).unwrap();
        assert_eq!(rng_homs.len(), 1);
        assert!(rng_homs[0].is_zero());
        let bimod_homs = enumerate_homs(&zero, &reg, HomKind::BimoduleHom, None, &caps()).unwrap();
        assert_eq!(bimod_homs.len(), 2);
        assert!(!r_isomorphic(&zero, &reg, &caps()).unwrap());
        assert!(r_isomorphic(&reg, &regular_rrng(&f2), &caps()).unwrap());
    }

    #[test]
    fn faithful_bimodule_has_zero_annihilators() {
        let m2 = cat::mat(2, 2).unwrap();
        let ann = annihilators(&regular_rrng(&m2));
        assert!(ann.left.is_zero() && ann.right.is_zero() && ann.two_sided.is_zero());
    }

    #[test]
    fn types_of_the_zmod4_bimodules() {
        let z4 = cat::zmod(4).unwrap();
        let rad = crate::substructure::close(
            z4.rng(),
            &ElementSet::singleton(2),
            crate::substructure::CloseMode::Ideal,
            &caps(),
        )
        .unwrap();
        let ideal = cat::ideal_as_rrng(&z4, 2, &caps()).unwrap();
        assert_eq!(rrng_type(&ideal, &caps()).unwrap(), RrngType::T1);
        let (quot, _) = quotient_rrng(&z4, &rad).unwrap();
        assert_eq!(rrng_type(&quot, &caps()).unwrap(), RrngType::T3);
        assert!(matches!(rrng_type(&f4_over_f2(), &caps()), Err(Error::NotMinimal { witness_size: 2 })));
    }

    #[test]
    fn invariant_set_must_be_closed() {
        let z4 = cat::zmod(4).unwrap();
        let bad = rrng_from_ideal(&z4, &ElementSet::new(vec![0, 1]));
        assert!(matches!(bad, Err(Error::PreconditionViolated(_))));
    }
}
