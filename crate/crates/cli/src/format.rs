//! Line-oriented text formats for rings and bimodule-rngs.
//!
//! A ring record:
//! ```text
//! ring <name>
//! carrier d1 … dk
//! unity c1 … ck
//! mul i j = c1 … ck      # one line per basis pair, all k² required
//! end
//! ```
//!
//! A bimodule-rng record replaces `unity` with the base-ring reference in the
//! header (`rrng <name> over <ringref>`) and adds `lact i j = …` and
//! `ract i j = …` lines. `#` starts a comment anywhere.

use std::collections::BTreeMap;
use std::fmt;

use minext_core::algebra::{build_rng, CarrierGroup, FiniteRing, FiniteRng};
use minext_core::bimodule::{validate_rrng, RRng};

/// A parse or validation diagnostic pinned to a file location.
#[derive(Debug, Clone)]
pub struct Diag {
    pub file: String,
    pub line: usize,
    pub rule: String,
}

impl Diag {
    fn new(file: &str, line: usize, rule: impl Into<String>) -> Diag {
        Diag { file: file.to_string(), line, rule: rule.into() }
    }
}

impl fmt::Display for Diag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.file, self.line, self.rule)
    }
}

type Table = BTreeMap<(usize, usize), Vec<u32>>;

#[derive(Debug, Clone)]
pub struct RawRing {
    pub name: String,
    pub line: usize,
    pub orders: Vec<u32>,
    pub unity: Vec<u32>,
    pub mul: Table,
}

#[derive(Debug, Clone)]
pub struct RawRRng {
    pub name: String,
    pub over: String,
    pub line: usize,
    pub orders: Vec<u32>,
    pub mul: Table,
    pub lact: Table,
    pub ract: Table,
}

#[derive(Debug, Clone)]
pub enum RawRecord {
    Ring(RawRing),
    RRng(RawRRng),
}

fn parse_indices(file: &str, line: usize, toks: &[&str]) -> Result<Vec<u32>, Diag> {
    toks.iter()
        .map(|t| {
            t.parse::<u32>()
                .map_err(|_| Diag::new(file, line, format!("`{t}` is not a non-negative integer")))
        })
        .collect()
}

/// Parses a `<kw> i j = c1 … ck` line into the table, rejecting duplicates.
fn parse_table_line(
    file: &str,
    line: usize,
    kw: &str,
    toks: &[&str],
    table: &mut Table,
) -> Result<(), Diag> {
    if toks.len() < 4 || toks[2] != "=" {
        return Err(Diag::new(file, line, format!("`{kw}` expects `{kw} i j = c1 … ck`")));
    }
    let i = toks[0]
        .parse::<usize>()
        .map_err(|_| Diag::new(file, line, format!("bad basis index `{}`", toks[0])))?;
    let j = toks[1]
        .parse::<usize>()
        .map_err(|_| Diag::new(file, line, format!("bad basis index `{}`", toks[1])))?;
    let coords = parse_indices(file, line, &toks[3..])?;
    if table.insert((i, j), coords).is_some() {
        return Err(Diag::new(file, line, format!("duplicate record `{kw} {i} {j}`")));
    }
    Ok(())
}

/// Parses a whole document into its raw records.
pub fn parse_document(file: &str, text: &str) -> Result<Vec<RawRecord>, Diag> {
    enum State {
        Top,
        InRing(RawRing),
        InRRng(RawRRng),
    }
    let mut state = State::Top;
    let mut records = Vec::new();
    for (idx, raw_line) in text.lines().enumerate() {
        let n = idx + 1;
        let stripped = raw_line.split('#').next().unwrap_or("");
        let toks: Vec<&str> = stripped.split_whitespace().collect();
        if toks.is_empty() {
            continue;
        }
        if toks[0] == "end" {
            if toks.len() != 1 {
                return Err(Diag::new(file, n, "`end` takes no arguments"));
            }
            match std::mem::replace(&mut state, State::Top) {
                State::Top => return Err(Diag::new(file, n, "`end` without an open record")),
                State::InRing(r) => records.push(RawRecord::Ring(r)),
                State::InRRng(r) => records.push(RawRecord::RRng(r)),
            }
            continue;
        }
        match (&mut state, toks[0]) {
            (State::Top, "ring") => {
                if toks.len() != 2 {
                    return Err(Diag::new(file, n, "`ring` expects exactly one name"));
                }
                state = State::InRing(RawRing {
                    name: toks[1].to_string(),
                    line: n,
                    orders: vec![],
                    unity: vec![],
                    mul: Table::new(),
                });
            }
            (State::Top, "rrng") => {
                if toks.len() != 4 || toks[2] != "over" {
                    return Err(Diag::new(file, n, "`rrng` expects `rrng <name> over <ringref>`"));
                }
                state = State::InRRng(RawRRng {
                    name: toks[1].to_string(),
                    over: toks[3].to_string(),
                    line: n,
                    orders: vec![],
                    mul: Table::new(),
                    lact: Table::new(),
                    ract: Table::new(),
                });
            }
            (State::Top, other) => {
                return Err(Diag::new(file, n, format!("expected `ring` or `rrng`, found `{other}`")));
            }
            (State::InRing(r), "carrier") => {
                if !r.orders.is_empty() {
                    return Err(Diag::new(file, n, "duplicate `carrier` record"));
                }
                r.orders = parse_indices(file, n, &toks[1..])?;
                if r.orders.is_empty() || r.orders.iter().any(|&d| d < 2) {
                    return Err(Diag::new(file, n, "`carrier` expects factors d1 … dk, each ≥ 2"));
                }
            }
            (State::InRRng(r), "carrier") => {
                if !r.orders.is_empty() {
                    return Err(Diag::new(file, n, "duplicate `carrier` record"));
                }
                r.orders = parse_indices(file, n, &toks[1..])?;
                if r.orders.is_empty() || r.orders.iter().any(|&d| d < 2) {
                    return Err(Diag::new(file, n, "`carrier` expects factors d1 … dk, each ≥ 2"));
                }
            }
            (State::InRing(r), "unity") => {
                if !r.unity.is_empty() {
                    return Err(Diag::new(file, n, "duplicate `unity` record"));
                }
                r.unity = parse_indices(file, n, &toks[1..])?;
                if r.unity.is_empty() {
                    return Err(Diag::new(file, n, "`unity` expects coordinates c1 … ck"));
                }
            }
            (State::InRing(r), "mul") => {
                parse_table_line(file, n, "mul", &toks[1..], &mut r.mul)?;
            }
            (State::InRRng(r), "mul") => {
                parse_table_line(file, n, "mul", &toks[1..], &mut r.mul)?;
            }
            (State::InRRng(r), "lact") => {
                parse_table_line(file, n, "lact", &toks[1..], &mut r.lact)?;
            }
            (State::InRRng(r), "ract") => {
                parse_table_line(file, n, "ract", &toks[1..], &mut r.ract)?;
            }
            (_, other) => {
                return Err(Diag::new(file, n, format!("unexpected record `{other}`")));
            }
        }
    }
    if !matches!(state, State::Top) {
        return Err(Diag::new(file, text.lines().count(), "record not closed by `end`"));
    }
    Ok(records)
}

/// Checks completeness of a table and flattens it to element indices.
fn flatten_table(
    file: &str,
    raw_line: usize,
    kw: &str,
    table: &Table,
    rows: usize,
    cols: usize,
    target: &CarrierGroup,
) -> Result<Vec<usize>, Diag> {
    let mut out = Vec::with_capacity(rows * cols);
    for i in 0..rows {
        for j in 0..cols {
            let coords = table
                .get(&(i, j))
                .ok_or_else(|| Diag::new(file, raw_line, format!("missing record `{kw} {i} {j}`")))?;
            out.push(element_of(file, raw_line, kw, target, coords)?);
        }
    }
    if let Some(((i, j), _)) = table.iter().find(|((i, j), _)| *i >= rows || *j >= cols) {
        return Err(Diag::new(file, raw_line, format!("`{kw} {i} {j}` is out of range")));
    }
    Ok(out)
}

fn element_of(
    file: &str,
    line: usize,
    kw: &str,
    carrier: &CarrierGroup,
    coords: &[u32],
) -> Result<usize, Diag> {
    if coords.len() != carrier.rank()
        || coords.iter().zip(carrier.orders()).any(|(&c, &d)| c >= d)
    {
        return Err(Diag::new(
            file,
            line,
            format!("`{kw}` coordinates {coords:?} do not fit carrier {:?}", carrier.orders()),
        ));
    }
    Ok(carrier.index_of(coords))
}

fn build_table_rng(file: &str, r_line: usize, orders: &[u32], mul: &Table) -> Result<FiniteRng, Diag> {
    let carrier = CarrierGroup::new(orders.to_vec())
        .map_err(|e| Diag::new(file, r_line, e.to_string()))?;
    let k = carrier.rank();
    let sc = flatten_table(file, r_line, "mul", mul, k, k, &carrier)?;
    build_rng(carrier, sc).map_err(|e| Diag::new(file, r_line, e.to_string()))
}

/// Builds and validates the ring a raw record describes.
pub fn build_ring(file: &str, raw: &RawRing) -> Result<FiniteRing, Diag> {
    if raw.orders.is_empty() {
        return Err(Diag::new(file, raw.line, "missing `carrier` record"));
    }
    if raw.unity.is_empty() {
        return Err(Diag::new(file, raw.line, "missing `unity` record"));
    }
    let rng = build_table_rng(file, raw.line, &raw.orders, &raw.mul)?;
    let unity = element_of(file, raw.line, "unity", rng.carrier(), &raw.unity)?;
    FiniteRing::new(rng, unity).map_err(|e| Diag::new(file, raw.line, e.to_string()))
}

/// Builds and validates the bimodule-rng a raw record describes, once the
/// base-ring reference has been resolved.
pub fn build_rrng(file: &str, raw: &RawRRng, base: &FiniteRing) -> Result<RRng, Diag> {
    if raw.orders.is_empty() {
        return Err(Diag::new(file, raw.line, "missing `carrier` record"));
    }
    let i_rng = build_table_rng(file, raw.line, &raw.orders, &raw.mul)?;
    let kr = base.rank();
    let ki = i_rng.rank();
    let lact = flatten_table(file, raw.line, "lact", &raw.lact, kr, ki, i_rng.carrier())?;
    let ract = flatten_table(file, raw.line, "ract", &raw.ract, ki, kr, i_rng.carrier())?;
    validate_rrng(base.clone(), i_rng, lact, ract)
        .map_err(|e| Diag::new(file, raw.line, e.to_string()))
}

fn coord_string(carrier: &CarrierGroup, elem: usize) -> String {
    carrier
        .coords_of(elem)
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn push_table(out: &mut String, kw: &str, rows: usize, cols: usize, f: impl Fn(usize, usize) -> String) {
    for i in 0..rows {
        for j in 0..cols {
            out.push_str(&format!("{kw} {i} {j} = {}\n", f(i, j)));
        }
    }
}

/// Emits a ring in canonical form.
pub fn emit_ring(name: &str, ring: &FiniteRing) -> String {
    let c = ring.carrier();
    let orders: Vec<String> = c.orders().iter().map(|d| d.to_string()).collect();
    let mut out = format!("ring {name}\ncarrier {}\nunity {}\n", orders.join(" "), coord_string(c, ring.unity()));
    push_table(&mut out, "mul", c.rank(), c.rank(), |i, j| {
        coord_string(c, ring.rng().basis_product(i, j))
    });
    out.push_str("end\n");
    out
}

/// Emits a bimodule-rng in canonical form; the base ring is referenced by
/// `over` and must be emitted (or resolvable) separately.
pub fn emit_rrng(name: &str, over: &str, m: &RRng) -> String {
    let c = m.i_rng().carrier();
    let orders: Vec<String> = c.orders().iter().map(|d| d.to_string()).collect();
    let mut out = format!("rrng {name} over {over}\ncarrier {}\n", orders.join(" "));
    let (kr, ki) = (m.ring().rank(), c.rank());
    push_table(&mut out, "mul", ki, ki, |i, j| coord_string(c, m.i_rng().basis_product(i, j)));
    push_table(&mut out, "lact", kr, ki, |i, j| coord_string(c, m.lact_basis(i, j)));
    push_table(&mut out, "ract", ki, kr, |i, j| coord_string(c, m.ract_basis(i, j)));
    out.push_str("end\n");
    out
}
