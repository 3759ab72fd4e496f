//! Named constructors for the rings, bimodules, and embeddings used by the
//! verification corpus, plus the `name(args)` spec parser that makes them
//! addressable from the command line.

use crate::algebra::{build_rng, CarrierGroup, FiniteRing};
use crate::bimodule::{quotient_rrng, rrng_from_ideal, validate_rrng, RRng};
use crate::substructure::{close, is_maximal_ideal, CloseMode, ElementSet, EmbeddedSubring};
use crate::{Caps, Error, Result};

/// ℤ/n as a ring.
pub fn zmod(n: u32) -> Result<FiniteRing> {
    if n < 2 {
        return Err(Error::BadParams(format!("zmod requires n >= 2, got {n}")));
    }
    let c = CarrierGroup::new(vec![n])?;
    FiniteRing::new(build_rng(c, vec![1])?, 1)
}

/// Reduction rules x^f = c_0 + c_1 x + … for the supported non-prime orders,
/// from the fixed irreducibles x²+x+1 (F_4), x³+x+1 (F_8), x²+1 (F_9).
fn field_params(q: u32) -> Result<(u32, usize, Vec<u32>)> {
    match q {
        4 => Ok((2, 2, vec![1, 1])),
        8 => Ok((2, 3, vec![1, 1, 0])),
        9 => Ok((3, 2, vec![2, 0])),
        q if q >= 2 && is_prime_u32(q) => Ok((q, 1, vec![])),
        _ => Err(Error::BadParams(format!("gf requires a supported prime power, got {q}"))),
    }
}

fn is_prime_u32(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// The field F_q on the basis 1, x, …, x^{f-1}.
pub fn gf(q: u32) -> Result<FiniteRing> {
    let (p, f, red) = field_params(q)?;
    let c = CarrierGroup::new(vec![p; f])?;
    // powers of x up to x^{2f-2} as coefficient vectors, reduced by the rule
    let mut powers: Vec<Vec<u32>> = Vec::with_capacity(2 * f - 1);
    for t in 0..f {
        let mut v = vec![0u32; f];
        v[t] = 1;
        powers.push(v);
    }
    for t in f..(2 * f - 1) {
        // x^t = x · x^{t-1}: shift then reduce the overflowing coefficient
        let prev = powers[t - 1].clone();
        let mut v = vec![0u32; f];
        for s in 0..f - 1 {
            v[s + 1] = prev[s];
        }
        let lead = prev[f - 1];
        for s in 0..f {
            v[s] = (v[s] + lead * red[s]) % p;
        }
        powers.push(v);
    }
    let coord_idx = |t: usize| -> usize {
        // coordinate vector (c_0 … c_{f-1}) lives at carrier position
        // (c_0, …, c_{f-1}) with coordinate 0 the constant term
        c.index_of(&powers[t])
    };
    let mut sc = Vec::with_capacity(f * f);
    for i in 0..f {
        for j in 0..f {
            sc.push(coord_idx(i + j));
        }
    }
    let unity = c.index_of(&unit_vec(f, 0));
    FiniteRing::new(build_rng(c, sc)?, unity)
}

fn unit_vec(len: usize, pos: usize) -> Vec<u32> {
    let mut v = vec![0u32; len];
    v[pos] = 1;
    v
}

/// Matrix ring over F_q on the cells given by `cells` (row-major pairs),
/// tensored with the field basis.
fn cell_ring(q: u32, cells: &[(usize, usize)]) -> Result<FiniteRing> {
    let field = gf(q)?;
    let p = field.carrier().orders()[0];
    let f = field.rank();
    let pos_of = |i: usize, j: usize| cells.iter().position(|&c| c == (i, j));
    let k = cells.len() * f;
    let carrier = CarrierGroup::new(vec![p; k])?;
    let mut sc = Vec::with_capacity(k * k);
    for &(i, j) in cells {
        for s in 0..f {
            for &(l, m) in cells {
                for t in 0..f {
                    let mut coords = vec![0u32; k];
                    if j == l {
                        let prod = field.mul(
                            field.carrier().basis_elem(s),
                            field.carrier().basis_elem(t),
                        );
                        let pc = field.carrier().coords_of(prod);
                        let cell = pos_of(i, m).ok_or_else(|| {
                            Error::BadParams("cell set is not multiplicatively closed".into())
                        })?;
                        for (u, &cu) in pc.iter().enumerate() {
                            coords[cell * f + u] = cu;
                        }
                    }
                    sc.push(carrier.index_of(&coords));
                }
            }
        }
    }
    let mut unity_coords = vec![0u32; k];
    let one = field.carrier().coords_of(field.unity());
    for (c, &(i, j)) in cells.iter().enumerate() {
        if i == j {
            for (u, &cu) in one.iter().enumerate() {
                unity_coords[c * f + u] = cu;
            }
        }
    }
    let unity = carrier.index_of(&unity_coords);
    FiniteRing::new(build_rng(carrier, sc)?, unity)
}

fn all_cells(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect()
}

fn upper_cells(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect()
}

/// Full matrix ring M_n(F_q), basis e_11, e_12, …, e_nn (row-major) tensored
/// with the field basis.
pub fn mat(n: usize, q: u32) -> Result<FiniteRing> {
    if n < 1 {
        return Err(Error::BadParams("mat requires n >= 1".into()));
    }
    cell_ring(q, &all_cells(n))
}

/// Upper-triangular matrix ring T_n(F_q).
pub fn tri(n: usize, q: u32) -> Result<FiniteRing> {
    if n < 1 {
        return Err(Error::BadParams("tri requires n >= 1".into()));
    }
    cell_ring(q, &upper_cells(n))
}

/// Direct product of rings on the concatenated carrier.
pub fn product_ring(factors: &[FiniteRing]) -> Result<FiniteRing> {
    if factors.is_empty() {
        return Err(Error::BadParams("product requires at least one factor".into()));
    }
    let mut orders = Vec::new();
    let mut offsets = Vec::with_capacity(factors.len());
    for r in factors {
        offsets.push(orders.len());
        orders.extend_from_slice(r.carrier().orders());
    }
    let carrier = CarrierGroup::new(orders)?;
    let k = carrier.rank();
    let mut sc = vec![0usize; k * k];
    for (fi, r) in factors.iter().enumerate() {
        let off = offsets[fi];
        let kr = r.rank();
        for i in 0..kr {
            for j in 0..kr {
                let prod = r.rng().basis_product(i, j);
                let pc = r.carrier().coords_of(prod);
                let mut coords = vec![0u32; k];
                for (u, &cu) in pc.iter().enumerate() {
                    coords[off + u] = cu;
                }
                sc[(off + i) * k + (off + j)] = carrier.index_of(&coords);
            }
        }
    }
    let mut unity_coords = vec![0u32; k];
    for (fi, r) in factors.iter().enumerate() {
        let uc = r.carrier().coords_of(r.unity());
        for (u, &cu) in uc.iter().enumerate() {
            unity_coords[offsets[fi] + u] = cu;
        }
    }
    let unity = carrier.index_of(&unity_coords);
    FiniteRing::new(build_rng(carrier, sc)?, unity)
}

/// The principal two-sided ideal generated by `g`, with inherited actions,
/// as a bimodule-rng over R.
pub fn ideal_as_rrng(ring: &FiniteRing, g: usize, caps: &Caps) -> Result<RRng> {
    if g >= ring.order() {
        return Err(Error::ElementOutOfRange { idx: g, order: ring.order() });
    }
    let members = close(ring.rng(), &ElementSet::singleton(g), CloseMode::Ideal, caps)?;
    Ok(rrng_from_ideal(ring, &members)?.0)
}

/// R/M with the zero product, for a maximal ideal M generated by `g`: a
/// simple bimodule over R.
pub fn zero_bimodule(ring: &FiniteRing, g: usize, caps: &Caps) -> Result<RRng> {
    if g >= ring.order() {
        return Err(Error::ElementOutOfRange { idx: g, order: ring.order() });
    }
    let m = close(ring.rng(), &ElementSet::singleton(g), CloseMode::Ideal, caps)?;
    if !is_maximal_ideal(ring, &m, caps)? {
        return Err(Error::BadParams("zero_bimodule requires a maximal ideal".into()));
    }
    let (rr, _) = quotient_rrng(ring, &m)?;
    Ok(rr.zero_product_variant())
}

/// x ↦ x^{p^e} on F_q, as a full element map.
fn frobenius_map(field: &FiniteRing, e: usize) -> Vec<usize> {
    let p = field.carrier().orders()[0] as usize;
    let mut map: Vec<usize> = field.elements().collect();
    for _ in 0..e {
        map = map
            .iter()
            .map(|&a| {
                let mut acc = field.unity();
                for _ in 0..p {
                    acc = field.mul(acc, a);
                }
                acc
            })
            .collect();
    }
    map
}

/// The bimodule F_q^σ: zero internal product, a·m = am, m·a = m·σ^e(a) with
/// σ the Frobenius x ↦ x^p.
pub fn twisted_field(q: u32, e: usize) -> Result<RRng> {
    let field = gf(q)?;
    let f = field.rank();
    if e >= f {
        return Err(Error::BadParams(format!("twist power must be < {f}, got {e}")));
    }
    let frob = frobenius_map(&field, e);
    let i_rng = build_rng(field.carrier().clone(), vec![0; f * f])?;
    let mut lact = Vec::with_capacity(f * f);
    let mut ract = Vec::with_capacity(f * f);
    for i in 0..f {
        for j in 0..f {
            lact.push(field.mul(field.carrier().basis_elem(i), field.carrier().basis_elem(j)));
            ract.push(field.mul(field.carrier().basis_elem(i), frob[field.carrier().basis_elem(j)]));
        }
    }
    validate_rrng(field, i_rng, lact, ract)
}

/// F_q embedded into M_f(F_p) by its regular representation over the prime
/// subfield (a ↦ the matrix of multiplication by a in the basis 1, x, …).
pub fn regular_embed(q: u32) -> Result<EmbeddedSubring> {
    let (p, f, _) = field_params(q)?;
    if f < 2 {
        return Err(Error::BadParams("regular_embed requires a non-prime field".into()));
    }
    let small = gf(q)?;
    let big = mat(f, p)?;
    let map: Vec<usize> = small
        .elements()
        .map(|a| {
            let mut coords = vec![0u32; f * f];
            for j in 0..f {
                let col = small.carrier().coords_of(small.mul(a, small.carrier().basis_elem(j)));
                for u in 0..f {
                    // cell (u, j) of M_f(F_p); the field part of `mat` over a
                    // prime is a single coordinate
                    coords[u * f + j] = col[u];
                }
            }
            big.carrier().index_of(&coords)
        })
        .collect();
    EmbeddedSubring::new(big, small, map)
}

/// T_n(F_q) inside M_n(F_q), cells transported in place.
pub fn tri_in_mat(n: usize, q: u32) -> Result<EmbeddedSubring> {
    let small = tri(n, q)?;
    let big = mat(n, q)?;
    let f = gf(q)?.rank();
    let tcells = upper_cells(n);
    let map: Vec<usize> = small
        .elements()
        .map(|a| {
            let sc = small.carrier().coords_of(a);
            let mut coords = vec![0u32; n * n * f];
            for (c, &(i, j)) in tcells.iter().enumerate() {
                for u in 0..f {
                    coords[(i * n + j) * f + u] = sc[c * f + u];
                }
            }
            big.carrier().index_of(&coords)
        })
        .collect();
    EmbeddedSubring::new(big, small, map)
}

/// Dense matrix over F_q with entries stored as field element indices; used
/// where the ambient matrix ring is too large to materialize as a carrier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldMat {
    pub n: usize,
    pub entries: Vec<usize>,
}

impl FieldMat {
    pub fn zero(n: usize) -> FieldMat {
        FieldMat { n, entries: vec![0; n * n] }
    }

    pub fn at(&self, i: usize, j: usize) -> usize {
        self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: usize) {
        self.entries[i * self.n + j] = v;
    }

    pub fn mul(&self, other: &FieldMat, field: &FiniteRing) -> FieldMat {
        let n = self.n;
        let mut out = FieldMat::zero(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0usize;
                for l in 0..n {
                    acc = field.add(acc, field.mul(self.at(i, l), other.at(l, j)));
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    pub fn add(&self, other: &FieldMat, field: &FiniteRing) -> FieldMat {
        let mut out = FieldMat::zero(self.n);
        for i in 0..self.n * self.n {
            out.entries[i] = field.add(self.entries[i], other.entries[i]);
        }
        out
    }
}

/// Level n of the doubling construction: the inflation f_n: M_{2^n}(F_q) →
/// M_{2^{n+1}}(F_q), the idempotent E (identity on odd 1-indexed rows of the
/// target), and g_n(A) = E f_n(A) E.
#[derive(Debug, Clone)]
pub struct BergmanLevel {
    pub field: FiniteRing,
    /// dimension of the domain (2^n)
    pub dim: usize,
    /// the idempotent in the target ring M_{2·dim}(F_q)
    pub e: FieldMat,
}

impl BergmanLevel {
    /// c ↦ diag(c, c) on each entry.
    pub fn f(&self, a: &FieldMat) -> FieldMat {
        let mut out = FieldMat::zero(2 * self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                out.set(2 * i, 2 * j, a.at(i, j));
                out.set(2 * i + 1, 2 * j + 1, a.at(i, j));
            }
        }
        out
    }

    /// g(A) = E f(A) E: keeps only odd-indexed (1-based) rows and columns.
    pub fn g(&self, a: &FieldMat) -> FieldMat {
        self.e.mul(&self.f(a), &self.field).mul(&self.e, &self.field)
    }

    /// The domain basis matrices e_rs·b for b over the field basis.
    pub fn domain_basis(&self) -> Vec<FieldMat> {
        let mut out = Vec::new();
        for r in 0..self.dim {
            for s in 0..self.dim {
                for t in 0..self.field.rank() {
                    let mut m = FieldMat::zero(self.dim);
                    m.set(r, s, self.field.carrier().basis_elem(t));
                    out.push(m);
                }
            }
        }
        out
    }
}

pub fn bergman_level(n: u32, q: u32) -> Result<BergmanLevel> {
    if !(1..=2).contains(&n) {
        return Err(Error::BadParams(format!("bergman_level supports n in 1..=2, got {n}")));
    }
    let field = gf(q)?;
    let dim = 1usize << n;
    let mut e = FieldMat::zero(2 * dim);
    for j in 0..dim {
        e.set(2 * j, 2 * j, field.unity());
    }
    Ok(BergmanLevel { field, dim, e })
}

/// Anything the catalog can produce.
#[derive(Debug, Clone)]
pub enum CatalogItem {
    Ring(FiniteRing),
    RRng(RRng),
    Embedding(EmbeddedSubring),
    Bergman(BergmanLevel),
}

/// A parsed `name(arg, …)` constructor call; arguments are integers or
/// nested calls.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogSpec {
    pub name: String,
    pub args: Vec<CatalogArg>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CatalogArg {
    Int(u64),
    Nested(CatalogSpec),
}

impl CatalogSpec {
    pub fn parse(input: &str) -> Result<CatalogSpec> {
        let s = input.trim();
        let (spec, rest) = parse_spec(s)?;
        if !rest.trim().is_empty() {
            return Err(Error::BadParams(format!("trailing input after spec: `{rest}`")));
        }
        Ok(spec)
    }
}

fn parse_spec(s: &str) -> Result<(CatalogSpec, &str)> {
    let s = s.trim_start();
    let name_end = s
        .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
        .unwrap_or(s.len());
    let name = &s[..name_end];
    if name.is_empty() {
        return Err(Error::BadParams(format!("expected a constructor name at `{s}`")));
    }
    let mut rest = s[name_end..].trim_start();
    let mut args = Vec::new();
    if let Some(r) = rest.strip_prefix('(') {
        rest = r.trim_start();
        if let Some(r) = rest.strip_prefix(')') {
            rest = r;
        } else {
            loop {
                let arg_rest;
                if rest.starts_with(|c: char| c.is_ascii_digit()) {
                    let end = rest
                        .find(|c: char| !c.is_ascii_digit())
                        .unwrap_or(rest.len());
                    let v: u64 = rest[..end]
                        .parse()
                        .map_err(|_| Error::BadParams(format!("bad integer in `{rest}`")))?;
                    args.push(CatalogArg::Int(v));
                    arg_rest = &rest[end..];
                } else {
                    let (nested, r) = parse_spec(rest)?;
                    args.push(CatalogArg::Nested(nested));
                    arg_rest = r;
                }
                rest = arg_rest.trim_start();
                if let Some(r) = rest.strip_prefix(',') {
                    rest = r.trim_start();
                } else if let Some(r) = rest.strip_prefix(')') {
                    rest = r;
                    break;
                } else {
                    return Err(Error::BadParams(format!("expected `,` or `)` at `{rest}`")));
                }
            }
        }
    }
    Ok((CatalogSpec { name: name.to_string(), args }, rest))
}

fn int_arg(spec: &CatalogSpec, i: usize) -> Result<u64> {
    match spec.args.get(i) {
        Some(CatalogArg::Int(v)) => Ok(*v),
        _ => Err(Error::BadParams(format!(
            "`{}` expects an integer at position {i}",
            spec.name
        ))),
    }
}

fn ring_arg(spec: &CatalogSpec, i: usize, caps: &Caps) -> Result<FiniteRing> {
    match spec.args.get(i) {
        Some(CatalogArg::Nested(s)) => match make(s, caps)? {
            CatalogItem::Ring(r) => Ok(r),
            _ => Err(Error::BadParams(format!(
                "`{}` expects a ring-valued spec at position {i}",
                spec.name
            ))),
        },
        _ => Err(Error::BadParams(format!(
            "`{}` expects a nested spec at position {i}",
            spec.name
        ))),
    }
}

fn arity(spec: &CatalogSpec, n: usize) -> Result<()> {
    if spec.args.len() != n {
        return Err(Error::BadParams(format!(
            "`{}` expects {n} argument(s), got {}",
            spec.name,
            spec.args.len()
        )));
    }
    Ok(())
}

/// Every constructor `make` dispatches on, with its signature and the kind
/// of item it yields.
pub const CONSTRUCTORS: &[(&str, &str, &str)] = &[
    ("zmod", "zmod(n)", "ring"),
    ("gf", "gf(q)", "ring"),
    ("mat", "mat(n, q)", "ring"),
    ("tri", "tri(n, q)", "ring"),
    ("product", "product(ring, ...)", "ring"),
    ("ideal_as_rrng", "ideal_as_rrng(ring, g)", "rrng"),
    ("zero_bimodule", "zero_bimodule(ring, g)", "rrng"),
    ("twisted_field", "twisted_field(q, e)", "rrng"),
    ("regular_embed", "regular_embed(q)", "embedding"),
    ("tri_in_mat", "tri_in_mat(n, q)", "embedding"),
    ("bergman_level", "bergman_level(n, q)", "bergman"),
];

/// Builds the object a parsed spec names.
pub fn make(spec: &CatalogSpec, caps: &Caps) -> Result<CatalogItem> {
    match spec.name.as_str() {
        "zmod" => {
            arity(spec, 1)?;
            Ok(CatalogItem::Ring(zmod(int_arg(spec, 0)? as u32)?))
        }
        "gf" => {
            arity(spec, 1)?;
            Ok(CatalogItem::Ring(gf(int_arg(spec, 0)? as u32)?))
        }
        "mat" => {
            arity(spec, 2)?;
            Ok(CatalogItem::Ring(mat(int_arg(spec, 0)? as usize, int_arg(spec, 1)? as u32)?))
        }
        "tri" => {
            arity(spec, 2)?;
            Ok(CatalogItem::Ring(tri(int_arg(spec, 0)? as usize, int_arg(spec, 1)? as u32)?))
        }
        "product" => {
            if spec.args.is_empty() {
                return Err(Error::BadParams("product requires at least one factor".into()));
            }
            let factors: Vec<FiniteRing> = (0..spec.args.len())
                .map(|i| ring_arg(spec, i, caps))
                .collect::<Result<_>>()?;
            Ok(CatalogItem::Ring(product_ring(&factors)?))
        }
        "ideal_as_rrng" => {
            arity(spec, 2)?;
            let ring = ring_arg(spec, 0, caps)?;
            Ok(CatalogItem::RRng(ideal_as_rrng(&ring, int_arg(spec, 1)? as usize, caps)?))
        }
        "zero_bimodule" => {
            arity(spec, 2)?;
            let ring = ring_arg(spec, 0, caps)?;
            Ok(CatalogItem::RRng(zero_bimodule(&ring, int_arg(spec, 1)? as usize, caps)?))
        }
        "twisted_field" => {
            arity(spec, 2)?;
            Ok(CatalogItem::RRng(twisted_field(
                int_arg(spec, 0)? as u32,
                int_arg(spec, 1)? as usize,
            )?))
        }
        "regular_embed" => {
            arity(spec, 1)?;
            Ok(CatalogItem::Embedding(regular_embed(int_arg(spec, 0)? as u32)?))
        }
        "tri_in_mat" => {
            arity(spec, 2)?;
            Ok(CatalogItem::Embedding(tri_in_mat(
                int_arg(spec, 0)? as usize,
                int_arg(spec, 1)? as u32,
            )?))
        }
        "bergman_level" => {
            arity(spec, 2)?;
            Ok(CatalogItem::Bergman(bergman_level(
                int_arg(spec, 0)? as u32,
                int_arg(spec, 1)? as u32,
            )?))
        }
        other => Err(Error::UnknownConstructor(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bimodule::{r_isomorphism, HomKind};
    use crate::substructure::{is_maximal_subring, is_prime, is_semiprime, ring_isomorphic};

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn constructor_parameter_validation() {
        assert!(zmod(1).is_err());
        assert!(matches!(gf(6), Err(Error::BadParams(_))));
        assert!(gf(5).is_ok());
        assert!(twisted_field(4, 2).is_err());
        assert!(regular_embed(2).is_err());
    }

    #[test]
    fn gf9_has_characteristic_three() {
        let f9 = gf(9).unwrap();
        assert_eq!(f9.order(), 9);
        let one = f9.unity();
        let three = f9.add(one, f9.add(one, one));
        assert_eq!(three, 0);
        assert!(is_prime(&f9));
    }

    #[test]
    fn matrix_and_triangular_rings() {
        let m2 = mat(2, 2).unwrap();
        assert_eq!(m2.order(), 16);
        assert!(is_prime(&m2));
        let t2 = tri(2, 2).unwrap();
        assert_eq!(t2.order(), 8);
        assert!(!is_semiprime(&t2));
        assert!(m2.elements().any(|a| m2.elements().any(|b| m2.mul(a, b) != m2.mul(b, a))));
    }

    #[test]
    fn products_multiply_orders_and_add_unities() {
        let f2 = gf(2).unwrap();
        let f3 = gf(3).unwrap();
        let p = product_ring(&[f2, f3]).unwrap();
        assert_eq!(p.order(), 6);
        assert!(ring_isomorphic(&p, &zmod(6).unwrap()));
    }

    #[test]
    fn twisting_destroys_the_bimodule_isomorphism_class() {
        let f4 = gf(4).unwrap();
        let twisted = twisted_field(4, 1).unwrap();
        let natural = zero_bimodule(&f4, 0, &caps()).unwrap();
        assert!(r_isomorphism(&twisted, &natural, HomKind::BimoduleHom, &caps())
            .unwrap()
            .is_none());
    }

    #[test]
    fn the_two_standard_embeddings() {
        let emb = regular_embed(4).unwrap();
        assert!(ring_isomorphic(&emb.small, &gf(4).unwrap()));
        assert!(ring_isomorphic(&emb.big, &mat(2, 2).unwrap()));
        let t = tri_in_mat(2, 2).unwrap();
        assert_eq!(t.image().len(), 8);
        assert!(is_maximal_subring(&t, &caps()).unwrap());
    }

    #[test]
    fn bergman_projection_at_level_one() {
        let lvl = bergman_level(1, 2).unwrap();
        assert_eq!(lvl.dim, 2);
        let one = lvl.field.unity();
        for i in 0..4 {
            for j in 0..4 {
                let expect = if i == j && i % 2 == 0 { one } else { 0 };
                assert_eq!(lvl.e.at(i, j), expect, "E entry ({i},{j})");
            }
        }
        assert!(bergman_level(3, 2).is_err());
    }

    #[test]
    fn spec_parsing_and_dispatch() {
        let spec = CatalogSpec::parse("ideal_as_rrng(zmod(4), 2)").unwrap();
        match make(&spec, &caps()).unwrap() {
            CatalogItem::RRng(m) => assert_eq!(m.i_order(), 2),
            other => panic!("expected an RRng, got {other:?}"),
        }
        assert!(CatalogSpec::parse("mat(2,2) trailing").is_err());
        let unknown = CatalogSpec::parse("frobnicate(1)").unwrap();
        assert!(matches!(make(&unknown, &caps()), Err(Error::UnknownConstructor(_))));
    }
}
