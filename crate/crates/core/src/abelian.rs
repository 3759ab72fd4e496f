//! Integer linear algebra over finite abelian carrier groups: Smith/Hermite
//! normal forms, quotient-group and subgroup cyclic decompositions.
//!
//! Quotients and subgroups of a carrier ⊕ Z/d_i are general finite abelian
//! groups; these helpers re-express them in cyclic-factor form so the rest of
//! the crate can keep working with mixed-radix carriers.

use crate::algebra::CarrierGroup;

/// Result of diagonalizing a relation matrix: `u * m * v = diag(d)` for
/// unimodular `u`, `v`; only `u` and its inverse are tracked.
struct Smith {
    diag: Vec<i64>,
    u: Vec<Vec<i64>>,
    uinv: Vec<Vec<i64>>,
}

fn smith(mut m: Vec<Vec<i64>>) -> Smith {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut u = identity(rows);
    let mut uinv = identity(rows);

    let swap_rows = |m: &mut Vec<Vec<i64>>, u: &mut Vec<Vec<i64>>, uinv: &mut Vec<Vec<i64>>, a: usize, b: usize| {
        m.swap(a, b);
        u.swap(a, b);
        for row in uinv.iter_mut() {
            row.swap(a, b);
        }
    };
    // row_j += c * row_i
    let add_row = |m: &mut Vec<Vec<i64>>, u: &mut Vec<Vec<i64>>, uinv: &mut Vec<Vec<i64>>, i: usize, j: usize, c: i64| {
        for x in 0..cols {
            m[j][x] += c * m[i][x];
        }
        for x in 0..rows {
            u[j][x] += c * u[i][x];
        }
        for row in uinv.iter_mut() {
            let t = c * row[j];
            row[i] -= t;
        }
    };
    let neg_row = |m: &mut Vec<Vec<i64>>, u: &mut Vec<Vec<i64>>, uinv: &mut Vec<Vec<i64>>, i: usize| {
        for x in 0..cols {
            m[i][x] = -m[i][x];
        }
        for x in 0..rows {
            u[i][x] = -u[i][x];
        }
        for row in uinv.iter_mut() {
            row[i] = -row[i];
        }
    };

    let mut t = 0;
    while t < rows && t < cols {
        // locate a pivot with minimal absolute value in the trailing block
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if m[i][j] != 0
                    && pivot.map_or(true, |(pi, pj)| m[i][j].abs() < m[pi][pj].abs())
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        if pi != t {
            swap_rows(&mut m, &mut u, &mut uinv, pi, t);
        }
        if pj != t {
            for row in m.iter_mut() {
                row.swap(pj, t);
            }
        }
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if m[i][t] != 0 {
                    let q = m[i][t].div_euclid(m[t][t]);
                    add_row(&mut m, &mut u, &mut uinv, t, i, -q);
                    if m[i][t] != 0 {
                        swap_rows(&mut m, &mut u, &mut uinv, i, t);
                        dirty = true;
                    }
                }
            }
            for j in t + 1..cols {
                if m[t][j] != 0 {
                    let q = m[t][j].div_euclid(m[t][t]);
                    for row in m.iter_mut() {
                        let s = row[t];
                        row[j] -= q * s;
                    }
                    if m[t][j] != 0 {
                        for row in m.iter_mut() {
                            row.swap(j, t);
                        }
                        dirty = true;
                    }
                }
            }
            if !dirty {
                break;
            }
        }
        if m[t][t] < 0 {
            neg_row(&mut m, &mut u, &mut uinv, t);
        }
        t += 1;
    }
    let diag = (0..rows).map(|i| if i < cols { m[i][i] } else { 0 }).collect();
    Smith { diag, u, uinv }
}

fn identity(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

/// Column-style Hermite form: returns an upper-triangular k×k basis of the
/// full-rank lattice spanned by the given columns.
fn hnf_basis(k: usize, mut cols: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
    let mut basis: Vec<Vec<i64>> = Vec::with_capacity(k);
    for r in 0..k {
        loop {
            let mut nz: Vec<usize> = (0..cols.len()).filter(|&j| cols[j][r] != 0).collect();
            if nz.len() <= 1 {
                break;
            }
            nz.sort_by_key(|&j| cols[j][r].abs());
            let (a, b) = (nz[0], nz[1]);
            let q = cols[b][r].div_euclid(cols[a][r]);
            for i in 0..k {
                let t = q * cols[a][i];
                cols[b][i] -= t;
            }
        }
        let j = (0..cols.len())
            .find(|&j| cols[j][r] != 0)
            .expect("lattice must be full rank");
        let mut col = cols.swap_remove(j);
        if col[r] < 0 {
            for x in col.iter_mut() {
                *x = -*x;
            }
        }
        // drop columns supported only in already-processed rows (they are zero now)
        cols.retain(|c| c.iter().skip(r).any(|&x| x != 0));
        basis.push(col);
    }
    // basis[r] has its first nonzero entry at row r: transpose into matrix form
    // b[i][j] = entry i of basis column j; lower-left entries vanish.
    let mut b = vec![vec![0i64; k]; k];
    for (j, col) in basis.iter().enumerate() {
        for i in 0..k {
            b[i][j] = col[i];
        }
    }
    b
}

/// Solve `b * w = v` for upper-triangular `b` with positive diagonal; panics
/// if `v` is not in the column span (callers guarantee membership).
fn solve_upper(b: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    let k = v.len();
    let mut w = vec![0i64; k];
    for i in (0..k).rev() {
        let mut rhs = v[i];
        for j in i + 1..k {
            rhs -= b[i][j] * w[j];
        }
        assert_eq!(rhs % b[i][i], 0, "vector not in lattice");
        w[i] = rhs / b[i][i];
    }
    w
}

fn mat_vec(m: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    m.iter().map(|row| row.iter().zip(v).map(|(&a, &b)| a * b).sum()).collect()
}

/// A quotient of a carrier group by a subgroup, re-expressed in cyclic form.
#[derive(Debug, Clone)]
pub struct QuotientGroup {
    pub carrier: CarrierGroup,
    /// ambient index -> quotient index
    pub proj: Vec<usize>,
    /// quotient index -> least ambient representative
    pub section: Vec<usize>,
}

/// Decomposes `ambient / <subgroup>` into cyclic factors.
///
/// `subgroup` must be the full member list of a subgroup (closed under
/// addition, containing 0).
pub fn quotient_group(ambient: &CarrierGroup, subgroup: &[usize]) -> QuotientGroup {
    let k = ambient.rank();
    let mut rel: Vec<Vec<i64>> = Vec::new();
    // relation columns: the carrier orders plus the subgroup generators
    let mut cols: Vec<Vec<i64>> = Vec::new();
    for i in 0..k {
        let mut c = vec![0i64; k];
        c[i] = ambient.orders()[i] as i64;
        cols.push(c);
    }
    for &s in subgroup {
        cols.push(ambient.coords_of(s).iter().map(|&x| x as i64).collect());
    }
    for i in 0..k {
        rel.push(cols.iter().map(|c| c[i]).collect());
    }
    let sm = smith(rel);
    let kept: Vec<usize> = (0..k).filter(|&i| sm.diag[i] > 1).collect();
    let orders: Vec<u32> = kept.iter().map(|&i| sm.diag[i] as u32).collect();
    let carrier = if orders.is_empty() {
        CarrierGroup::trivial()
    } else {
        CarrierGroup::new(orders).expect("valid quotient orders")
    };
    let mut proj = Vec::with_capacity(ambient.order());
    for x in 0..ambient.order() {
        let coords: Vec<i64> = ambient.coords_of(x).iter().map(|&c| c as i64).collect();
        let y = mat_vec(&sm.u, &coords);
        let q: Vec<u32> = kept
            .iter()
            .map(|&i| y[i].rem_euclid(sm.diag[i]) as u32)
            .collect();
        proj.push(if q.is_empty() { 0 } else { carrier.index_of(&q) });
    }
    let mut section = vec![usize::MAX; carrier.order()];
    for x in 0..ambient.order() {
        if section[proj[x]] == usize::MAX {
            section[proj[x]] = x;
        }
    }
    debug_assert!(section.iter().all(|&s| s != usize::MAX));
    QuotientGroup { carrier, proj, section }
}

/// A subgroup of a carrier group re-expressed as a standalone cyclic-factor
/// carrier, with the embedding into the ambient group.
#[derive(Debug, Clone)]
pub struct SubgroupGroup {
    pub carrier: CarrierGroup,
    /// subgroup index -> ambient index (an injective additive map)
    pub embed: Vec<usize>,
}

impl SubgroupGroup {
    /// Inverse of `embed` for ambient elements that lie in the subgroup.
    pub fn index_of_ambient(&self, ambient_idx: usize) -> Option<usize> {
        self.embed.iter().position(|&x| x == ambient_idx)
    }
}

/// Decomposes a subgroup (given by its full member list, closed under
/// addition) into cyclic factors.
pub fn subgroup_decomposition(ambient: &CarrierGroup, members: &[usize]) -> SubgroupGroup {
    let k = ambient.rank();
    if k == 0 || members.len() <= 1 {
        return SubgroupGroup { carrier: CarrierGroup::trivial(), embed: vec![0] };
    }
    let mut gens: Vec<Vec<i64>> = Vec::new();
    for i in 0..k {
        let mut c = vec![0i64; k];
        c[i] = ambient.orders()[i] as i64;
        gens.push(c);
    }
    for &s in members {
        gens.push(ambient.coords_of(s).iter().map(|&x| x as i64).collect());
    }
    let b = hnf_basis(k, gens);
    // relations of the subgroup lattice in b-coordinates: columns of b^{-1} diag(d)
    let mut rel = vec![vec![0i64; k]; k];
    for i in 0..k {
        let mut d = vec![0i64; k];
        d[i] = ambient.orders()[i] as i64;
        let w = solve_upper(&b, &d);
        for r in 0..k {
            rel[r][i] = w[r];
        }
    }
    let sm = smith(rel);
    let kept: Vec<usize> = (0..k).filter(|&i| sm.diag[i] > 1).collect();
    let orders: Vec<u32> = kept.iter().map(|&i| sm.diag[i] as u32).collect();
    let carrier = if orders.is_empty() {
        CarrierGroup::trivial()
    } else {
        CarrierGroup::new(orders).expect("valid subgroup orders")
    };
    assert_eq!(
        carrier.order(),
        members.len(),
        "member list must be a subgroup"
    );
    let mut embed = Vec::with_capacity(carrier.order());
    for q in 0..carrier.order() {
        let qc = if carrier.rank() == 0 { vec![] } else { carrier.coords_of(q) };
        let mut y = vec![0i64; k];
        for (pos, &i) in kept.iter().enumerate() {
            y[i] = qc[pos] as i64;
        }
        let w = mat_vec(&sm.uinv, &y);
        let x = mat_vec(&b, &w);
        let coords: Vec<u32> = x
            .iter()
            .zip(ambient.orders())
            .map(|(&v, &d)| v.rem_euclid(d as i64) as u32)
            .collect();
        embed.push(ambient.index_of(&coords));
    }
    debug_assert!({
        let mut img = embed.clone();
        img.sort_unstable();
        let mut mem = members.to_vec();
        mem.sort_unstable();
        img == mem
    });
    SubgroupGroup { carrier, embed }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn closure_add(c: &CarrierGroup, seed: &[usize]) -> Vec<usize> {
        let mut set = std::collections::BTreeSet::new();
        set.insert(0);
        let mut work: Vec<usize> = seed.to_vec();
        while let Some(x) = work.pop() {
            if set.insert(x) {
                let cur: Vec<usize> = set.iter().copied().collect();
                for y in cur {
                    work.push(c.add(x, y));
                }
                work.push(c.neg(x));
            }
        }
        set.into_iter().collect()
    }

    #[test]
    fn quotient_of_z4_by_two_is_z2() {
        let c = CarrierGroup::new(vec![4]).unwrap();
        let q = quotient_group(&c, &[0, 2]);
        assert_eq!(q.carrier.order(), 2);
        assert_eq!(q.proj[0], q.proj[2]);
        assert_ne!(q.proj[0], q.proj[1]);
        assert_eq!(q.section[q.proj[1]], 1);
    }

    #[test]
    fn quotient_projection_is_additive() {
        let c = CarrierGroup::new(vec![2, 4, 3]).unwrap();
        let sub = closure_add(&c, &[c.index_of(&[1, 2, 0])]);
        let q = quotient_group(&c, &sub);
        assert_eq!(q.carrier.order() * sub.len(), c.order());
        for a in 0..c.order() {
            for b in 0..c.order() {
                assert_eq!(
                    q.proj[c.add(a, b)],
                    q.carrier.add(q.proj[a], q.proj[b])
                );
            }
        }
    }

    #[test]
    fn subgroup_decomposition_is_an_isomorphism_onto_members() {
        let c = CarrierGroup::new(vec![4, 4]).unwrap();
        let sub = closure_add(&c, &[c.index_of(&[2, 0]), c.index_of(&[0, 1])]);
        let s = subgroup_decomposition(&c, &sub);
        assert_eq!(s.carrier.order(), sub.len());
        for a in 0..s.carrier.order() {
            assert!(sub.contains(&s.embed[a]));
            for b in 0..s.carrier.order() {
                assert_eq!(
                    s.embed[s.carrier.add(a, b)],
                    c.add(s.embed[a], s.embed[b])
                );
            }
        }
    }

    #[test]
    fn trivial_subgroup_and_full_quotient() {
        let c = CarrierGroup::new(vec![6]).unwrap();
        let s = subgroup_decomposition(&c, &[0]);
        assert_eq!(s.carrier.order(), 1);
        let q = quotient_group(&c, &(0..6).collect::<Vec<_>>());
        assert_eq!(q.carrier.order(), 1);
    }
}
