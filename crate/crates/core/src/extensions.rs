//! Ideal extensions E(R,I) and trivial extensions R∝M: construction, the
//! subring/ideal correspondences, centrality detection, direct-summand
//! reports, and recovery of the ideal-extension structure from an embedding.

use std::collections::HashMap;

use crate::algebra::{build_rng, CarrierGroup, FiniteRing};
use crate::bimodule::{
    enumerate_r_subrngs, is_minimal_rrng, is_rhom_map, regular_rrng, rrng_from_invariant_set,
    HomKind, RHom, RRng,
};
use crate::substructure::{
    centralizer, close, enumerate_ideals, is_maximal_subring, quotient_ring, CloseMode,
    ElementSet, EmbeddedSubring, QuotientRing,
};
use crate::{Caps, Error, Result};

/// The ring E(R,I) on the additive group R ⊕ I with
/// (r,i)(r',i') = (rr', ir' + ri' + ii'), together with the two canonical
/// substructures.
#[derive(Debug, Clone)]
pub struct IdealExtension {
    pub ext: FiniteRing,
    /// the copy R ⊕ 0
    pub r_embed: EmbeddedSubring,
    /// the two-sided ideal 0 ⊕ I
    pub i_image: ElementSet,
    pub source: RRng,
}

impl IdealExtension {
    pub fn i_order(&self) -> usize {
        self.source.i_order()
    }

    /// E-index of the pair (r, i).
    pub fn pair(&self, r: usize, i: usize) -> usize {
        r * self.i_order() + i
    }

    pub fn r_part(&self, e: usize) -> usize {
        e / self.i_order()
    }

    pub fn i_part(&self, e: usize) -> usize {
        e % self.i_order()
    }
}

/// Builds E(R,I) on the concatenation of R's and I's cyclic factors (R's
/// coordinates most significant, so the pair (r,i) has index r·|I| + i).
pub fn ideal_extension(m: &RRng, caps: &Caps) -> Result<IdealExtension> {
    let r = m.ring();
    let ni = m.i_order();
    caps.check_enumeration(r.order().saturating_mul(ni))?;
    let kr = r.rank();
    let ki = m.i_rng().rank();
    let mut orders: Vec<u32> = r.carrier().orders().to_vec();
    orders.extend_from_slice(m.i_rng().carrier().orders());
    let carrier = if orders.is_empty() { CarrierGroup::trivial() } else { CarrierGroup::new(orders)? };
    let ke = kr + ki;
    let pair = |r_idx: usize, i_idx: usize| r_idx * ni + i_idx;
    let mut sc = Vec::with_capacity(ke * ke);
    for p in 0..ke {
        for q in 0..ke {
            sc.push(match (p < kr, q < kr) {
                (true, true) => pair(r.rng().basis_product(p, q), 0),
                (true, false) => pair(0, m.lact_basis(p, q - kr)),
                (false, true) => pair(0, m.ract_basis(p - kr, q)),
                (false, false) => pair(0, m.i_rng().basis_product(p - kr, q - kr)),
            });
        }
    }
    let rng = build_rng(carrier, sc)?;
    let ext = FiniteRing::new(rng, pair(r.unity(), 0))?;
    let map: Vec<usize> = r.elements().map(|x| pair(x, 0)).collect();
    let r_embed = EmbeddedSubring::new(ext.clone(), r.clone(), map)?;
    let i_image = ElementSet::new((0..ni).collect());
    Ok(IdealExtension { ext, r_embed, i_image, source: m.clone() })
}

/// The trivial extension R∝M: E(R,M) for a bimodule with zero internal
/// product.
pub fn trivial_extension(m: &RRng, caps: &Caps) -> Result<IdealExtension> {
    let k = m.i_rng().rank();
    for i in 0..k {
        for j in 0..k {
            if m.i_rng().basis_product(i, j) != 0 {
                return Err(Error::NonzeroSquare { i, j });
            }
        }
    }
    ideal_extension(m, caps)
}

/// The subrings of E containing R ⊕ 0, each paired with the R-subrng K of I
/// it corresponds to (the subring is R ⊕ K).
pub fn subrings_over(x: &IdealExtension, caps: &Caps) -> Result<Vec<(ElementSet, ElementSet)>> {
    let subrngs = enumerate_r_subrngs(&x.source, caps)?;
    let mut out = Vec::with_capacity(subrngs.len());
    for k in subrngs {
        let members: Vec<usize> = x
            .source
            .ring()
            .elements()
            .flat_map(|r| k.iter().map(move |i| (r, i)))
            .map(|(r, i)| x.pair(r, i))
            .collect();
        out.push((ElementSet::new(members), k));
    }
    out.sort_by(|a, b| a.1.cmp(&b.1));
    Ok(out)
}

/// The ideal I_φ = {(φ(i), −i)} of E attached to φ ∈ Hom_R(I, R).
pub fn i_phi(x: &IdealExtension, phi: &RHom) -> Result<ElementSet> {
    let reg = regular_rrng(x.source.ring());
    if phi.map.len() != x.i_order() || !is_rhom_map(&x.source, &reg, &phi.map, HomKind::RngHom) {
        return Err(Error::NotAHom);
    }
    Ok(ElementSet::new(
        (0..x.i_order())
            .map(|i| x.pair(phi.apply(i), x.source.i_rng().neg(i)))
            .collect(),
    ))
}

/// One entry of the complete ideal description of E(R,I) for minimal I with
/// I² ≠ 0.
#[derive(Debug, Clone)]
pub struct IdealRecord {
    pub members: ElementSet,
    pub kind: IdealKind,
}

#[derive(Debug, Clone)]
pub enum IdealKind {
    /// A ⊕ 0 for an ideal A of R inside ann_R(I)
    Type1 { a: ElementSet },
    /// A ⊕ I for an ideal A of R
    Type2 { a: ElementSet },
    /// {(a, −i) : a + Z = φ(i)} for Z ⊆ ann_R(I) and nonzero φ: I → R/Z
    Type3 { z: ElementSet, quotient: QuotientRing, phi: Vec<usize> },
}

/// Assigns every ideal of E(R,I) to exactly one of the three families.
pub fn classify_ideals(x: &IdealExtension, caps: &Caps) -> Result<Vec<IdealRecord>> {
    if x.source.has_zero_product() {
        return Err(Error::PreconditionViolated("ideal description requires a nonzero product"));
    }
    if !is_minimal_rrng(&x.source)? {
        return Err(Error::PreconditionViolated("ideal description requires a minimal source"));
    }
    let ideals = enumerate_ideals(&x.ext, caps)?;
    let r = x.source.ring();
    let mut out = Vec::with_capacity(ideals.len());
    for k in ideals {
        let r_slice = ElementSet::new(
            k.iter().filter(|&e| x.i_part(e) == 0).map(|e| x.r_part(e)).collect(),
        );
        let kind = if k.iter().all(|e| x.i_part(e) == 0) {
            IdealKind::Type1 { a: r_slice }
        } else if x.i_image.is_subset_of(&k) {
            IdealKind::Type2 { a: r_slice }
        } else {
            let quotient = quotient_ring(r, &r_slice)?;
            let mut phi = vec![usize::MAX; x.i_order()];
            for e in k.iter() {
                let i = x.source.i_rng().neg(x.i_part(e));
                let q = quotient.proj(x.r_part(e));
                if phi[i] != usize::MAX && phi[i] != q {
                    return Err(Error::PreconditionViolated("ideal does not induce a function on I"));
                }
                phi[i] = q;
            }
            if phi.iter().any(|&q| q == usize::MAX) {
                return Err(Error::PreconditionViolated("ideal does not project onto I"));
            }
            IdealKind::Type3 { z: r_slice, quotient, phi }
        };
        out.push(IdealRecord { members: k, kind });
    }
    Ok(out)
}

/// A ring extension is central when the big ring is generated, as a left
/// module over the embedded small ring, by the centralizer of the image.
pub fn is_central_extension(emb: &EmbeddedSubring, caps: &Caps) -> Result<bool> {
    caps.check_closure(emb.big.order())?;
    let cent = centralizer(&emb.big, &emb.image());
    let n = emb.big.order();
    let mut in_set = vec![false; n];
    let mut queue: Vec<usize> = cent.iter().collect();
    let mut list: Vec<usize> = Vec::new();
    queue.push(0);
    while let Some(x) = queue.pop() {
        if in_set[x] {
            continue;
        }
        in_set[x] = true;
        list.push(x);
        queue.push(emb.big.neg(x));
        for i in 0..list.len() {
            queue.push(emb.big.add(x, list[i]));
        }
        for s in emb.small.elements() {
            queue.push(emb.big.mul(emb.apply(s), x));
        }
    }
    Ok(list.len() == n)
}

/// The three equivalent direct-summand conditions for a minimal ideal with
/// nonzero square, plus the witness idempotent when they hold.
#[derive(Debug, Clone)]
pub struct BrauerReport {
    /// I ∩ Z(R) ≠ 0
    pub meets_center: bool,
    /// a nonzero central idempotent of R lying in I
    pub idempotent: Option<usize>,
    /// I is a ring-direct summand of R
    pub direct_summand: bool,
}

impl BrauerReport {
    pub fn holds(&self) -> bool {
        self.meets_center
    }

    pub fn consistent(&self) -> bool {
        self.meets_center == self.idempotent.is_some()
            && self.meets_center == self.direct_summand
    }
}

pub fn brauer_report(ring: &FiniteRing, i: &ElementSet, caps: &Caps) -> Result<BrauerReport> {
    let ideals = enumerate_ideals(ring, caps)?;
    if i.is_zero() || !ideals.contains(i) {
        return Err(Error::PreconditionViolated("subset must be a nonzero ideal"));
    }
    if ideals.iter().any(|j| !j.is_zero() && j != i && j.is_subset_of(i)) {
        return Err(Error::PreconditionViolated("ideal must be minimal"));
    }
    if i.iter().all(|x| i.iter().all(|y| ring.mul(x, y) == 0)) {
        return Err(Error::PreconditionViolated("ideal must have nonzero square"));
    }
    let z = crate::substructure::center(ring);
    let meets_center = i.intersect(&z).len() > 1;
    let idempotent = i
        .iter()
        .find(|&e| e != 0 && ring.mul(e, e) == e && z.contains(e));
    let direct_summand = ideals.iter().any(|j| {
        i.intersect(j).is_zero()
            && i.len() * j.len() == ring.order()
            && {
                let mut seen = vec![false; ring.order()];
                for a in i.iter() {
                    for b in j.iter() {
                        seen[ring.add(a, b)] = true;
                    }
                }
                seen.iter().all(|&s| s)
            }
    });
    Ok(BrauerReport { meets_center, idempotent, direct_summand })
}

/// Result of re-expressing a minimal extension as an ideal extension of its
/// base.
#[derive(Debug, Clone)]
pub struct RecoveredExtension {
    pub rrng: RRng,
    pub extension: IdealExtension,
    /// witness isomorphism: big-ring index -> E(R,J) index
    pub iso: Vec<usize>,
}

/// Given a minimal extension and a nonzero ideal J of the big ring with
/// J ∩ R = 0, extracts the bimodule-rng structure on J and a witness
/// isomorphism big ≅ E(R,J) fixing R.
pub fn recover_ideal_extension(
    emb: &EmbeddedSubring,
    j: &ElementSet,
    caps: &Caps,
) -> Result<RecoveredExtension> {
    if !is_maximal_subring(emb, caps)? {
        return Err(Error::NotMinimalExtension);
    }
    if j.is_zero()
        || !j.intersect(&emb.image()).is_zero()
        || close(emb.big.rng(), j, CloseMode::Ideal, caps)? != *j
        || emb.small.order() * j.len() != emb.big.order()
    {
        return Err(Error::NoSuchIdeal);
    }
    let map: Vec<usize> = emb.small.elements().map(|x| emb.apply(x)).collect();
    let (rrng, embed) = rrng_from_invariant_set(&emb.small, emb.big.rng(), &map, j)?;
    let extension = ideal_extension(&rrng, caps)?;
    let j_index: HashMap<usize, usize> =
        embed.iter().enumerate().map(|(q, &x)| (x, q)).collect();
    // decompose each s uniquely as (embedded r) + (element of J)
    let mut iso = vec![usize::MAX; emb.big.order()];
    for s in emb.big.elements() {
        for r in emb.small.elements() {
            let d = emb.big.sub(s, emb.apply(r));
            if let Some(&q) = j_index.get(&d) {
                iso[s] = extension.pair(r, q);
                break;
            }
        }
        if iso[s] == usize::MAX {
            return Err(Error::NoSuchIdeal);
        }
    }
    Ok(RecoveredExtension { rrng, extension, iso })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bimodule::{regular_rrng, r_isomorphic};
    use crate::catalog as cat;
    use crate::substructure::{enumerate_ideals, is_maximal_subring, is_semiprime, ring_isomorphic};

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn extension_by_the_regular_bimodule_is_the_square() {
        let f2 = cat::gf(2).unwrap();
        let x = ideal_extension(&regular_rrng(&f2), &caps()).unwrap();
        let square = cat::product_ring(&[f2.clone(), f2.clone()]).unwrap();
        assert!(ring_isomorphic(&x.ext, &square));
        // the explicit witness (r, i) -> (r, r + i)
        for r in f2.elements() {
            for i in f2.elements() {
                for r2 in f2.elements() {
                    for i2 in f2.elements() {
                        let a = x.pair(r, i);
                        let b = x.pair(r2, i2);
                        let p = x.ext.mul(a, b);
                        let img = |e: usize| {
                            square.carrier().index_of(&[
                                x.r_part(e) as u32,
                                f2.add(x.r_part(e), x.i_part(e)) as u32,
                            ])
                        };
                        assert_eq!(img(p), square.mul(img(a), img(b)));
                        assert_eq!(img(x.ext.add(a, b)), square.add(img(a), img(b)));
                    }
                }
            }
        }
    }

    #[test]
    fn trivial_extension_of_f2_is_the_dual_numbers() {
        let f2 = cat::gf(2).unwrap();
        let x = trivial_extension(&cat::zero_bimodule(&f2, 0, &caps()).unwrap(), &caps()).unwrap();
        assert_eq!(x.ext.order(), 4);
        assert!(!is_semiprime(&x.ext));
        let eps = x.pair(0, 1);
        assert_eq!(x.ext.mul(eps, eps), 0);
        assert!(!ring_isomorphic(&x.ext, &cat::zmod(4).unwrap()));
        assert!(!ring_isomorphic(&x.ext, &cat::gf(4).unwrap()));
    }

    #[test]
    fn trivial_extension_rejects_a_nonzero_square() {
        let f2 = cat::gf(2).unwrap();
        let err = trivial_extension(&regular_rrng(&f2), &caps()).unwrap_err();
        assert!(matches!(err, Error::NonzeroSquare { .. }));
    }

    #[test]
    fn zmod4_extension_by_its_radical_is_minimal() {
        let z4 = cat::zmod(4).unwrap();
        let m = cat::ideal_as_rrng(&z4, 2, &caps()).unwrap();
        let x = ideal_extension(&m, &caps()).unwrap();
        assert_eq!(x.ext.order(), 8);
        assert!(is_maximal_subring(&x.r_embed, &caps()).unwrap());
    }

    #[test]
    fn subring_counts_over_the_base() {
        let f2 = cat::gf(2).unwrap();
        let f4 = cat::gf(4).unwrap();
        let reg = ideal_extension(&regular_rrng(&f2), &caps()).unwrap();
        assert_eq!(subrings_over(&reg, &caps()).unwrap().len(), 2);
        let triv = trivial_extension(&cat::zero_bimodule(&f2, 0, &caps()).unwrap(), &caps()).unwrap();
        assert_eq!(subrings_over(&triv, &caps()).unwrap().len(), 2);
        let acts: Vec<usize> = (0..f4.rank()).map(|j| f4.carrier().basis_elem(j)).collect();
        let f4_over_f2 =
            crate::bimodule::validate_rrng(f2, f4.rng().clone(), acts.clone(), acts).unwrap();
        let big = ideal_extension(&f4_over_f2, &caps()).unwrap();
        assert_eq!(subrings_over(&big, &caps()).unwrap().len(), 3);
    }

    #[test]
    fn ideal_records_of_the_square_extension() {
        let f2 = cat::gf(2).unwrap();
        let x = ideal_extension(&regular_rrng(&f2), &caps()).unwrap();
        let records = classify_ideals(&x, &caps()).unwrap();
        assert_eq!(records.len(), 4);
        let count = |p: fn(&IdealKind) -> bool| records.iter().filter(|r| p(&r.kind)).count();
        assert_eq!(count(|k| matches!(k, IdealKind::Type1 { .. })), 1);
        assert_eq!(count(|k| matches!(k, IdealKind::Type2 { .. })), 2);
        assert_eq!(count(|k| matches!(k, IdealKind::Type3 { .. })), 1);
    }

    #[test]
    fn centrality_of_commutative_and_matrix_extensions() {
        let f2 = cat::gf(2).unwrap();
        let x = ideal_extension(&regular_rrng(&f2), &caps()).unwrap();
        assert!(is_central_extension(&x.r_embed, &caps()).unwrap());
        assert!(!is_central_extension(&cat::regular_embed(4).unwrap(), &caps()).unwrap());
    }

    #[test]
    fn recovery_roundtrips_and_rejects_meeting_ideals() {
        let f2 = cat::gf(2).unwrap();
        let m = regular_rrng(&f2);
        let x = ideal_extension(&m, &caps()).unwrap();
        let rec = recover_ideal_extension(&x.r_embed, &x.i_image, &caps()).unwrap();
        assert!(r_isomorphic(&rec.rrng, &m, &caps()).unwrap());
        let f4 = cat::gf(4).unwrap();
        let emb = crate::substructure::find_unital_embedding(&f2, &f4).unwrap();
        let whole = enumerate_ideals(&f4, &caps())
            .unwrap()
            .into_iter()
            .max_by_key(|i| i.len())
            .unwrap();
        assert!(matches!(
            recover_ideal_extension(&emb, &whole, &caps()),
            Err(Error::NoSuchIdeal)
        ));
    }
}
