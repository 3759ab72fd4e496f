//! Classification of minimal extensions of prime rings into the five types
//! P / PI / SR / SI / N, the central refinement, the named verification
//! suites, and the instance corpus they run over.

use rayon::prelude::*;

use crate::algebra::{build_rng, find_unity, CarrierGroup, FiniteRing};
use crate::bimodule::{
    annihilators, enumerate_homs, exists_nonzero_rhom, is_minimal_rrng, is_rhom_map,
    quotient_rrng, r_isomorphic, r_isomorphism, regular_rrng, rrng_from_invariant_set, rrng_type,
    validate_rrng, HomKind, RRng, RrngType,
};
use crate::catalog as cat;
use crate::extensions::{
    brauer_report, classify_ideals, i_phi, ideal_extension, is_central_extension,
    recover_ideal_extension, subrings_over, trivial_extension, IdealExtension, IdealKind,
};
use crate::substructure::{
    center, centralizer, close, enumerate_ideals, is_bijective, is_maximal_ideal,
    is_maximal_subring, is_prime, is_semiprime, little_ideal, prime_radical, quotient_ring,
    ring_isomorphic, unital_ring_homs, CloseMode, ElementSet, EmbeddedSubring,
};
use crate::{Caps, Error, Result};

/// The five forms a minimal extension of a prime ring can take.
#[derive(Debug, Clone)]
pub enum ExtensionType {
    /// prime, every nonzero ideal meets the base
    P,
    /// prime ideal extension: E(R,I) with Hom(I,R) = 0, I² ≠ 0, ann = 0
    Pi { i: RRng },
    /// semiprime reducible: Hom(I, R/ann) = 0, I² ≠ 0, ann ≠ 0
    Sr { i: RRng },
    /// semiprime subdirectly irreducible: Hom(I, R/ann) ≠ 0
    Si { prime_ideal: ElementSet, i: RRng },
    /// not semiprime: trivial extension by a simple bimodule
    N { m: RRng },
}

impl ExtensionType {
    pub fn tag(&self) -> &'static str {
        match self {
            ExtensionType::P => "P",
            ExtensionType::Pi { .. } => "PI",
            ExtensionType::Sr { .. } => "SR",
            ExtensionType::Si { .. } => "SI",
            ExtensionType::N { .. } => "N",
        }
    }
}

/// Decision procedure over the complete ideal list of the big ring: no
/// nonzero ideal meeting the base trivially means type P; otherwise the
/// extension is an ideal extension and the recovered bimodule-rng decides.
pub fn classify_minimal_extension(emb: &EmbeddedSubring, caps: &Caps) -> Result<ExtensionType> {
    if !is_prime(&emb.small) {
        return Err(Error::NotPrimeBase);
    }
    if !is_maximal_subring(emb, caps)? {
        return Err(Error::NotMinimalExtension);
    }
    let image = emb.image();
    let ideals = enumerate_ideals(&emb.big, caps)?;
    // ideal list is canonically ordered, so this choice is deterministic
    let j = ideals
        .iter()
        .find(|j| !j.is_zero() && j.intersect(&image).is_zero());
    let Some(j) = j else { return Ok(ExtensionType::P) };
    let rec = recover_ideal_extension(emb, j, caps)?;
    let i = rec.rrng;
    if i.has_zero_product() {
        return Ok(ExtensionType::N { m: i });
    }
    let ann = annihilators(&i).two_sided;
    match rrng_type(&i, caps)? {
        RrngType::T1 => Ok(ExtensionType::N { m: i }),
        RrngType::T3 => Ok(ExtensionType::Si { prime_ideal: ann, i }),
        RrngType::T2 if ann.is_zero() => Ok(ExtensionType::Pi { i }),
        RrngType::T2 => Ok(ExtensionType::Sr { i }),
    }
}

/// The central refinement: SI extensions are R-isomorphic to R × R/M and N
/// extensions to R ∝ R/M, with M the (maximal) annihilator.
#[derive(Debug, Clone)]
pub enum CentralType {
    P,
    Si { m: ElementSet, model: FiniteRing, iso: Vec<usize> },
    N { m: ElementSet, model: FiniteRing, iso: Vec<usize> },
}

pub fn classify_central(emb: &EmbeddedSubring, caps: &Caps) -> Result<CentralType> {
    let base = classify_minimal_extension(emb, caps)?;
    if !is_central_extension(emb, caps)? {
        return Err(Error::NotCentral);
    }
    match base {
        ExtensionType::P => Ok(CentralType::P),
        ExtensionType::Si { prime_ideal: m, .. } => {
            let quo = quotient_ring(&emb.small, &m)?;
            let model = cat::product_ring(&[emb.small.clone(), quo.ring.clone()])?;
            let r_in_model: Vec<usize> = emb
                .small
                .elements()
                .map(|r| {
                    let mut c = emb.small.carrier().coords_of(r);
                    c.extend(quo.ring.carrier().coords_of(quo.proj(r)));
                    model.carrier().index_of(&c)
                })
                .collect();
            let iso = find_base_fixing_isomorphism(emb, &model, &r_in_model).ok_or(
                Error::PreconditionViolated("central SI extension must be R-isomorphic to R × R/M"),
            )?;
            Ok(CentralType::Si { m, model, iso })
        }
        ExtensionType::N { m: bimod } => {
            let ann = annihilators(&bimod).two_sided;
            let (qr, _) = quotient_rrng(&emb.small, &ann)?;
            let model_ext = trivial_extension(&qr.zero_product_variant(), caps)?;
            let r_in_model: Vec<usize> =
                emb.small.elements().map(|r| model_ext.pair(r, 0)).collect();
            let iso = find_base_fixing_isomorphism(emb, &model_ext.ext, &r_in_model).ok_or(
                Error::PreconditionViolated("central N extension must be R-isomorphic to R ∝ R/M"),
            )?;
            Ok(CentralType::N { m: ann, model: model_ext.ext, iso })
        }
        // PI and SR extensions are never central
        _ => Err(Error::NotCentral),
    }
}

fn find_base_fixing_isomorphism(
    emb: &EmbeddedSubring,
    model: &FiniteRing,
    r_in_model: &[usize],
) -> Option<Vec<usize>> {
    unital_ring_homs(&emb.big, model, None).into_iter().find(|map| {
        is_bijective(map, model.order())
            && emb.small.elements().all(|r| map[emb.apply(r)] == r_in_model[r])
    })
}

/// Outcome of one verification suite.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub suite_id: String,
    pub instances: usize,
    pub passes: usize,
    pub failures: Vec<Failure>,
}

#[derive(Debug, Clone)]
pub struct Failure {
    pub instance: String,
    pub assertion: String,
    pub witness: String,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn summary_line(&self) -> String {
        format!("SUITE {}: {}/{} PASS", self.suite_id, self.passes, self.instances)
    }
}

/// One failed assertion within a check; `skipped` marks instances whose
/// construction exceeded the configured order caps, which are excluded from
/// the report rather than failed.
#[derive(Debug, Clone)]
pub struct CheckFail {
    pub assertion: String,
    pub witness: String,
    pub skipped: bool,
}

impl From<Error> for CheckFail {
    fn from(e: Error) -> CheckFail {
        CheckFail {
            assertion: "operation completed".into(),
            witness: e.to_string(),
            skipped: matches!(e, Error::OrderCapExceeded { .. }),
        }
    }
}

type Check = std::result::Result<(), CheckFail>;

fn ensure(cond: bool, assertion: &str, witness: String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(CheckFail { assertion: assertion.to_string(), witness, skipped: false })
    }
}

fn fmt_set(s: &ElementSet) -> String {
    format!("{:?}", s.members())
}

type CheckFn = Box<dyn FnOnce() -> Check + Send>;

fn run_parallel(suite_id: &str, checks: Vec<(String, CheckFn)>) -> VerificationReport {
    let results: Vec<(String, Check)> =
        checks.into_par_iter().map(|(id, f)| (id, f())).collect();
    let mut instances = 0usize;
    let mut failures = Vec::new();
    for (instance, r) in results {
        match r {
            Ok(()) => instances += 1,
            Err(f) if f.skipped => {} // over the order caps: not part of the run
            Err(f) => {
                instances += 1;
                failures.push(Failure { instance, assertion: f.assertion, witness: f.witness });
            }
        }
    }
    VerificationReport {
        suite_id: suite_id.to_string(),
        instances,
        passes: instances - failures.len(),
        failures,
    }
}

// ---------------------------------------------------------------------------
// corpus
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct RrngInstance {
    pub id: &'static str,
    pub m: RRng,
}

#[derive(Debug, Clone)]
pub struct EmbInstance {
    pub id: &'static str,
    pub emb: EmbeddedSubring,
    /// expected classification tag, when the base is prime
    pub expected: Option<&'static str>,
}

fn principal_ideal(ring: &FiniteRing, g: usize, caps: &Caps) -> Result<ElementSet> {
    close(ring.rng(), &ElementSet::singleton(g), CloseMode::Ideal, caps)
}

/// F_4 with the scalar F_2-action: a bimodule-rng that is *not* minimal
/// (F_2 sits inside as a proper nonzero subrng).
fn f4_as_f2_rng() -> Result<RRng> {
    let r = cat::gf(2)?;
    let f4 = cat::gf(4)?;
    let acts: Vec<usize> = (0..f4.rank()).map(|j| f4.carrier().basis_elem(j)).collect();
    validate_rrng(r, f4.rng().clone(), acts.clone(), acts)
}

/// The standing corpus of bimodule-rngs; ids are stable and addressable.
pub fn rrng_corpus(caps: &Caps) -> Result<Vec<RrngInstance>> {
    let f2 = cat::gf(2)?;
    let f3 = cat::gf(3)?;
    let f4 = cat::gf(4)?;
    let f8 = cat::gf(8)?;
    let f9 = cat::gf(9)?;
    let z4 = cat::zmod(4)?;
    let z9 = cat::zmod(9)?;
    let m2 = cat::mat(2, 2)?;
    let t2 = cat::tri(2, 2)?;
    let f2xf2 = cat::product_ring(&[f2.clone(), f2.clone()])?;

    let e10 = f2xf2.carrier().index_of(&[1, 0]);
    let t2_e12 = t2.carrier().basis_elem(1);

    let z4_rad = principal_ideal(&z4, 2, caps)?;
    let z9_rad = principal_ideal(&z9, 3, caps)?;

    let mut out = vec![
        RrngInstance { id: "f2/ring", m: regular_rrng(&f2) },
        RrngInstance { id: "f2/zero", m: cat::zero_bimodule(&f2, 0, caps)? },
        RrngInstance { id: "f2/f4-as-f2", m: f4_as_f2_rng()? },
        RrngInstance { id: "z4/ideal2", m: cat::ideal_as_rrng(&z4, 2, caps)? },
        RrngInstance { id: "z4/quot-f2", m: quotient_rrng(&z4, &z4_rad)?.0 },
        RrngInstance { id: "f3/ring", m: regular_rrng(&f3) },
        RrngInstance { id: "f3/zero", m: cat::zero_bimodule(&f3, 0, caps)? },
        RrngInstance { id: "f4/ring", m: regular_rrng(&f4) },
        RrngInstance { id: "f4/zero", m: cat::zero_bimodule(&f4, 0, caps)? },
        RrngInstance { id: "f4/twist", m: cat::twisted_field(4, 1)? },
        RrngInstance { id: "f8/ring", m: regular_rrng(&f8) },
        RrngInstance { id: "f8/twist", m: cat::twisted_field(8, 1)? },
        RrngInstance { id: "f9/zero", m: cat::zero_bimodule(&f9, 0, caps)? },
        RrngInstance { id: "f9/twist", m: cat::twisted_field(9, 1)? },
        RrngInstance { id: "m2f2/ring", m: regular_rrng(&m2) },
        RrngInstance { id: "f2xf2/min-ideal", m: cat::ideal_as_rrng(&f2xf2, e10, caps)? },
        RrngInstance { id: "f2xf2/zero-quot", m: cat::zero_bimodule(&f2xf2, e10, caps)? },
        RrngInstance { id: "t2f2/e12", m: cat::ideal_as_rrng(&t2, t2_e12, caps)? },
        RrngInstance { id: "z9/ideal3", m: cat::ideal_as_rrng(&z9, 3, caps)? },
        RrngInstance { id: "z9/quot-f3", m: quotient_rrng(&z9, &z9_rad)?.0 },
    ];
    out.push(RrngInstance { id: "m2f2/zero", m: out[14].m.zero_product_variant() });
    Ok(out)
}

pub fn minimal_rrng_corpus(caps: &Caps) -> Result<Vec<RrngInstance>> {
    Ok(rrng_corpus(caps)?
        .into_iter()
        .filter(|inst| is_minimal_rrng(&inst.m).unwrap_or(false))
        .collect())
}

fn diagonal_embedding(f: &FiniteRing) -> Result<EmbeddedSubring> {
    let big = cat::product_ring(&[f.clone(), f.clone()])?;
    let map = f
        .elements()
        .map(|a| {
            let ac = f.carrier().coords_of(a);
            let mut c = ac.clone();
            c.extend_from_slice(&ac);
            big.carrier().index_of(&c)
        })
        .collect();
    EmbeddedSubring::new(big, f.clone(), map)
}

fn unital_embedding(small: &FiniteRing, big: &FiniteRing) -> Result<EmbeddedSubring> {
    crate::substructure::find_unital_embedding(small, big)
        .ok_or(Error::BadEmbedding("no unital embedding exists"))
}

/// Pushes an instance, silently omitting those whose construction exceeds
/// the configured order caps.
fn push_in_cap(out: &mut Vec<EmbInstance>, inst: Result<EmbInstance>) -> Result<()> {
    match inst {
        Ok(v) => {
            out.push(v);
            Ok(())
        }
        Err(Error::OrderCapExceeded { .. }) => Ok(()),
        Err(e) => Err(e),
    }
}

/// Extensions whose base is prime, with the expected classification tag.
pub fn classification_corpus(caps: &Caps) -> Result<Vec<EmbInstance>> {
    let f2 = cat::gf(2)?;
    let f3 = cat::gf(3)?;
    let f4 = cat::gf(4)?;
    let f9 = cat::gf(9)?;
    let m2 = cat::mat(2, 2)?;
    type Builder<'a> = (&'static str, Option<&'static str>, Box<dyn FnOnce() -> Result<EmbeddedSubring> + 'a>);
    let builders: Vec<Builder> = vec![
        ("f2-in-f4", Some("P"), Box::new(|| unital_embedding(&f2, &f4))),
        ("f2-diag", Some("SI"), Box::new(|| diagonal_embedding(&f2))),
        ("f2-in-dual", Some("N"), Box::new(|| {
            Ok(trivial_extension(&cat::zero_bimodule(&f2, 0, caps)?, caps)?.r_embed)
        })),
        ("f3-in-f9", Some("P"), Box::new(|| unital_embedding(&f3, &f9))),
        ("f3-diag", Some("SI"), Box::new(|| diagonal_embedding(&f3))),
        ("f3-in-dual", Some("N"), Box::new(|| {
            Ok(trivial_extension(&cat::zero_bimodule(&f3, 0, caps)?, caps)?.r_embed)
        })),
        ("f4-in-m2f2", Some("P"), Box::new(|| cat::regular_embed(4))),
        ("f4-in-twist", Some("N"), Box::new(|| {
            Ok(trivial_extension(&cat::twisted_field(4, 1)?, caps)?.r_embed)
        })),
        ("m2f2-si", Some("SI"), Box::new(|| {
            Ok(ideal_extension(&regular_rrng(&m2), caps)?.r_embed)
        })),
        ("m2f2-n", Some("N"), Box::new(|| {
            Ok(trivial_extension(&regular_rrng(&m2).zero_product_variant(), caps)?.r_embed)
        })),
    ];
    let mut out = Vec::new();
    for (id, expected, build) in builders {
        push_in_cap(&mut out, build().map(|emb| EmbInstance { id, emb, expected }))?;
    }
    Ok(out)
}

/// All corpus embeddings, including the non-prime bases.
pub fn embedding_corpus(caps: &Caps) -> Result<Vec<EmbInstance>> {
    let mut out = classification_corpus(caps)?;
    out.push(EmbInstance { id: "t2-in-m2", emb: cat::tri_in_mat(2, 2)?, expected: None });
    let z4 = cat::zmod(4)?;
    push_in_cap(
        &mut out,
        cat::ideal_as_rrng(&z4, 2, caps)
            .and_then(|m| ideal_extension(&m, caps))
            .map(|x| EmbInstance { id: "z4-in-e", emb: x.r_embed, expected: None }),
    )?;
    Ok(out)
}

// ---------------------------------------------------------------------------
// suites
// ---------------------------------------------------------------------------

pub const SUITES: &[&str] = &[
    "minimalann",
    "produce",
    "posers",
    "suffiso",
    "idealcancel",
    "idealdescription",
    "semiprimeoversemiprime",
    "primeidealext",
    "annideals",
    "thethreetypes",
    "subdirectprime",
    "centralstuff",
    "brauer",
    "primecenter",
    "maincentral",
    "centralchar",
    "semiprimeovercentral",
    "partialreduction",
    "primeext",
    "simplechar",
    "succinctcentral",
    "no-finite-T2",
    "order4-census",
    "finiteindex-witness",
    "bergman-levels",
];

/// Runs a named suite over the standing corpus.
pub fn run_suite(suite_id: &str, caps: &Caps) -> Result<VerificationReport> {
    let caps = *caps;
    match suite_id {
        "minimalann" => suite_minimalann(caps),
        "produce" => suite_produce(caps),
        "posers" => suite_posers(caps),
        "suffiso" => suite_suffiso(caps),
        "idealcancel" => suite_idealcancel(caps),
        "idealdescription" => suite_idealdescription(caps),
        "semiprimeoversemiprime" => suite_semiprimeoversemiprime(caps),
        "primeidealext" => suite_primeidealext(caps),
        "annideals" => suite_annideals(caps),
        "thethreetypes" => suite_thethreetypes(caps),
        "subdirectprime" => suite_subdirectprime(caps),
        "centralstuff" => suite_centralstuff(caps),
        "brauer" => suite_brauer(caps),
        "primecenter" => suite_primecenter(caps),
        "maincentral" => suite_maincentral(caps),
        "centralchar" => suite_centralchar(caps),
        "semiprimeovercentral" => suite_semiprimeovercentral(caps),
        "partialreduction" => suite_partialreduction(caps),
        "primeext" => suite_primeext(caps),
        "simplechar" => suite_simplechar(caps),
        "succinctcentral" => suite_succinctcentral(caps),
        "no-finite-T2" => suite_no_finite_t2(caps),
        "order4-census" => suite_order4_census(caps),
        "finiteindex-witness" => suite_finiteindex_witness(caps),
        "bergman-levels" => suite_bergman_levels(caps),
        other => Err(Error::UnknownSuite(other.to_string())),
    }
}

fn minimal_checks(
    suite: &str,
    caps: Caps,
    per: impl Fn(RRng, Caps) -> Check + Send + Sync + Clone + 'static,
) -> Result<VerificationReport> {
    let corpus = minimal_rrng_corpus(&caps)?;
    let checks: Vec<(String, CheckFn)> = corpus
        .into_iter()
        .map(|inst| {
            let per = per.clone();
            let f: CheckFn = Box::new(move || per(inst.m, caps));
            (inst.id.to_string(), f)
        })
        .collect();
    Ok(run_parallel(suite, checks))
}

/// Annihilator of the ideal 0⊕I inside E, two-sided.
fn ann_in_ext(x: &IdealExtension) -> ElementSet {
    ElementSet::new(
        x.ext
            .elements()
            .filter(|&e| x.i_image.iter().all(|i| x.ext.mul(e, i) == 0 && x.ext.mul(i, e) == 0))
            .collect(),
    )
}

/// Nonzero ideals J of E with R ⊕ J = E as groups (the posers family).
fn complement_ideals(x: &IdealExtension, caps: &Caps) -> Result<Vec<ElementSet>> {
    let image = x.r_embed.image();
    Ok(enumerate_ideals(&x.ext, caps)?
        .into_iter()
        .filter(|j| j.intersect(&image).is_zero() && j.len() * image.len() == x.ext.order())
        .collect())
}

fn hom_count_to_regular(m: &RRng, caps: &Caps) -> Result<usize> {
    Ok(enumerate_homs(m, &regular_rrng(m.ring()), HomKind::RngHom, None, caps)?.len())
}

fn suite_minimalann(caps: Caps) -> Result<VerificationReport> {
    minimal_checks("minimalann", caps, |m, caps| {
        let r = m.ring();
        let ann = annihilators(&m);
        let qr = quotient_ring(r, &ann.right)?;
        ensure(
            is_prime(&qr.ring),
            "ann(I_R) is a prime ideal",
            format!("ann(I_R) = {}", fmt_set(&ann.right)),
        )?;
        let ql = quotient_ring(r, &ann.left)?;
        ensure(
            is_prime(&ql.ring),
            "ann(_R I) is a prime ideal",
            format!("ann(_R I) = {}", fmt_set(&ann.left)),
        )?;
        let qt = quotient_ring(r, &ann.two_sided)?;
        ensure(
            is_semiprime(&qt.ring),
            "ann_R(I) is a semiprime ideal",
            fmt_set(&ann.two_sided),
        )?;
        if !m.has_zero_product() {
            ensure(
                ann.right == ann.left && ann.left == ann.two_sided,
                "I² ≠ 0 forces all three annihilators to coincide",
                format!("right {} left {}", fmt_set(&ann.right), fmt_set(&ann.left)),
            )?;
            ensure(is_prime(&qt.ring), "ann_R(I) is prime when I² ≠ 0", fmt_set(&ann.two_sided))?;
        }
        // pin the ℤ/4 instance named in the references
        if m.ring().order() == 4 && m.i_order() == 2 && m.has_zero_product() {
            ensure(
                ann.two_sided.members() == [0, 2],
                "ann over ℤ/4 is {0,2}",
                fmt_set(&ann.two_sided),
            )?;
        }
        let _ = caps;
        Ok(())
    })
}

/// Independent oracle: all subrings of E containing the embedded base, by
/// single-element adjunction closures to a fixpoint.
fn oracle_subrings_over(x: &IdealExtension, caps: &Caps) -> Result<Vec<ElementSet>> {
    let image = x.r_embed.image();
    let mut found = std::collections::BTreeSet::new();
    found.insert(image.clone());
    loop {
        let snapshot: Vec<ElementSet> = found.iter().cloned().collect();
        let before = found.len();
        for s in &snapshot {
            for e in x.ext.elements() {
                if s.contains(e) {
                    continue;
                }
                found.insert(close(
                    x.ext.rng(),
                    &s.union(&ElementSet::singleton(e)),
                    CloseMode::Subrng,
                    caps,
                )?);
            }
        }
        if found.len() == before {
            break;
        }
    }
    Ok(found.into_iter().collect())
}

fn suite_produce(caps: Caps) -> Result<VerificationReport> {
    let corpus = rrng_corpus(&caps)?;
    let checks: Vec<(String, CheckFn)> = corpus
        .into_iter()
        .map(|inst| {
            let f: CheckFn = Box::new(move || {
                let x = ideal_extension(&inst.m, &caps)?;
                let pairs = subrings_over(&x, &caps)?;
                let oracle = oracle_subrings_over(&x, &caps)?;
                let listed: std::collections::BTreeSet<ElementSet> =
                    pairs.iter().map(|(s, _)| s.clone()).collect();
                ensure(
                    listed.len() == pairs.len(),
                    "correspondence K -> E(R,K) is injective",
                    format!("{} pairs, {} distinct subrings", pairs.len(), listed.len()),
                )?;
                let oracle_set: std::collections::BTreeSet<ElementSet> =
                    oracle.into_iter().collect();
                ensure(
                    listed == oracle_set,
                    "subrings over R match the adjunction-closure oracle",
                    format!("listed {} oracle {}", listed.len(), oracle_set.len()),
                )?;
                for (a, (sa, ka)) in pairs.iter().enumerate() {
                    for (sb, kb) in pairs.iter().skip(a + 1) {
                        ensure(
                            ka.is_subset_of(kb) == sa.is_subset_of(sb)
                                && kb.is_subset_of(ka) == sb.is_subset_of(sa),
                            "correspondence preserves inclusion both ways",
                            format!("K pair {} / {}", fmt_set(ka), fmt_set(kb)),
                        )?;
                    }
                }
                let minimal_ext = is_maximal_subring(&x.r_embed, &caps)?;
                let minimal_rrng = is_minimal_rrng(&inst.m)?;
                ensure(
                    minimal_ext == minimal_rrng,
                    "E(R,I) minimal over R iff I is a minimal bimodule-rng",
                    format!("extension minimal: {minimal_ext}, rrng minimal: {minimal_rrng}"),
                )
            });
            (inst.id.to_string(), f)
        })
        .collect();
    Ok(run_parallel("produce", checks))
}

fn suite_posers(caps: Caps) -> Result<VerificationReport> {
    let corpus = rrng_corpus(&caps)?;
    let checks: Vec<(String, CheckFn)> = corpus
        .into_iter()
        .map(|inst| {
            let f: CheckFn = Box::new(move || {
                let x = ideal_extension(&inst.m, &caps)?;
                let homs =
                    enumerate_homs(&inst.m, &regular_rrng(inst.m.ring()), HomKind::RngHom, None, &caps)?;
                let ideals = complement_ideals(&x, &caps)?;
                let built: std::collections::BTreeSet<ElementSet> = homs
                    .iter()
                    .map(|phi| i_phi(&x, phi))
                    .collect::<Result<_>>()?;
                ensure(
                    built.len() == homs.len(),
                    "φ -> I_φ is injective",
                    format!("{} homs, {} distinct ideals", homs.len(), built.len()),
                )?;
                let ideal_set: std::collections::BTreeSet<ElementSet> =
                    ideals.into_iter().collect();
                ensure(
                    built == ideal_set,
                    "ideals with R ⊕ I' = E are exactly the I_φ",
                    format!("built {} enumerated {}", built.len(), ideal_set.len()),
                )
            });
            (inst.id.to_string(), f)
        })
        .collect();
    Ok(run_parallel("posers", checks))
}

fn emb_map_vec(emb: &EmbeddedSubring) -> Vec<usize> {
    emb.small.elements().map(|x| emb.apply(x)).collect()
}

fn suite_suffiso(caps: Caps) -> Result<VerificationReport> {
    minimal_checks("suffiso", caps, |m, caps| {
        let x = ideal_extension(&m, &caps)?;
        let homs = enumerate_homs(&m, &regular_rrng(m.ring()), HomKind::RngHom, None, &caps)?;
        for phi in homs.iter().filter(|h| !h.is_zero()) {
            // minimality makes every nonzero hom injective
            ensure(
                is_bijective_onto_image(&phi.map),
                "nonzero hom out of a minimal bimodule-rng is injective",
                format!("images {:?}", phi.images),
            )?;
            let members = i_phi(&x, phi)?;
            let (j_rrng, embed) =
                rrng_from_invariant_set(m.ring(), x.ext.rng(), &emb_map_vec(&x.r_embed), &members)?;
            let lookup: std::collections::HashMap<usize, usize> =
                embed.iter().enumerate().map(|(q, &e)| (e, q)).collect();
            let map: Vec<usize> = (0..m.i_order())
                .map(|i| lookup[&x.pair(phi.apply(i), m.i_rng().neg(i))])
                .collect();
            ensure(
                is_rhom_map(&m, &j_rrng, &map, HomKind::RngHom)
                    && is_bijective(&map, j_rrng.i_order()),
                "Φ(i) = (φ(i), -i) is an R-isomorphism onto I_φ",
                format!("map {:?}", map),
            )?;
        }
        Ok(())
    })
}

fn is_bijective_onto_image(map: &[usize]) -> bool {
    let mut seen = std::collections::BTreeSet::new();
    map.iter().all(|&x| seen.insert(x))
}

fn suite_idealcancel(caps: Caps) -> Result<VerificationReport> {
    let corpus = minimal_rrng_corpus(&caps)?;
    let mut checks: Vec<(String, CheckFn)> = Vec::new();
    for (a, ia) in corpus.iter().enumerate() {
        for ib in corpus.iter().skip(a + 1) {
            if ia.m.ring() != ib.m.ring() {
                continue;
            }
            let (ma, mb) = (ia.m.clone(), ib.m.clone());
            let id = format!("{} ~ {}", ia.id, ib.id);
            let f: CheckFn = Box::new(move || {
                let direct = r_isomorphic(&ma, &mb, &caps)?;
                // E(R,I) ≅_R E(R,I') iff some complement ideal of E(R,I) is
                // R-isomorphic to I' (posers + suffiso reduction)
                let x = ideal_extension(&ma, &caps)?;
                let map_vec = emb_map_vec(&x.r_embed);
                let mut ext_iso = false;
                for j in complement_ideals(&x, &caps)? {
                    let (jr, _) = rrng_from_invariant_set(ma.ring(), x.ext.rng(), &map_vec, &j)?;
                    if r_isomorphic(&jr, &mb, &caps)? {
                        ext_iso = true;
                        break;
                    }
                }
                ensure(
                    direct == ext_iso,
                    "R-isomorphism class of E(R,I) determines that of I",
                    format!("I ≅ I': {direct}, extension-level: {ext_iso}"),
                )
            });
            checks.push((id, f));
        }
    }
    Ok(run_parallel("idealcancel", checks))
}

fn suite_idealdescription(caps: Caps) -> Result<VerificationReport> {
    let corpus = minimal_rrng_corpus(&caps)?;
    let mut checks: Vec<(String, CheckFn)> = Vec::new();
    for inst in corpus {
        if inst.m.has_zero_product() {
            // the description requires I² ≠ 0; pin the error path once
            if inst.id == "f2/zero" {
                let m = inst.m.clone();
                let f: CheckFn = Box::new(move || {
                    let x = ideal_extension(&m, &caps)?;
                    ensure(
                        matches!(classify_ideals(&x, &caps), Err(Error::PreconditionViolated(_))),
                        "I² = 0 is rejected as a precondition violation",
                        "classify_ideals returned a value".into(),
                    )
                });
                checks.push((inst.id.to_string(), f));
            }
            continue;
        }
        let m = inst.m.clone();
        let f: CheckFn = Box::new(move || {
            let x = ideal_extension(&m, &caps)?;
            let records = classify_ideals(&x, &caps)?;
            let all = enumerate_ideals(&x.ext, &caps)?;
            ensure(
                records.len() == all.len(),
                "every ideal receives exactly one record",
                format!("{} records, {} ideals", records.len(), all.len()),
            )?;
            let ann = annihilators(&m).two_sided;
            let mut type3 = 0usize;
            for rec in &records {
                match &rec.kind {
                    IdealKind::Type1 { a } => {
                        ensure(
                            rec.members.iter().all(|e| x.i_part(e) == 0),
                            "Type1 ideals live in R ⊕ 0",
                            fmt_set(&rec.members),
                        )?;
                        ensure(
                            a.is_subset_of(&ann),
                            "Type1 slice lies in ann_R(I)",
                            fmt_set(a),
                        )?;
                    }
                    IdealKind::Type2 { .. } => {
                        ensure(
                            x.i_image.is_subset_of(&rec.members),
                            "Type2 ideals contain 0 ⊕ I",
                            fmt_set(&rec.members),
                        )?;
                    }
                    IdealKind::Type3 { z, quotient, phi } => {
                        type3 += 1;
                        ensure(z.is_subset_of(&ann), "Type3 Z lies in ann_R(I)", fmt_set(z))?;
                        ensure(
                            phi.iter().any(|&q| q != 0),
                            "Type3 φ is nonzero",
                            format!("{phi:?}"),
                        )?;
                        // rebuild the member set from (Z, φ) and compare
                        let mut rebuilt = Vec::new();
                        for i in 0..x.i_order() {
                            for a in m.ring().elements() {
                                if quotient.proj(a) == phi[i] {
                                    rebuilt.push(x.pair(a, m.i_rng().neg(i)));
                                }
                            }
                        }
                        ensure(
                            ElementSet::new(rebuilt.clone()) == rec.members,
                            "Type3 members are {(a,-i) : a + Z = φ(i)}",
                            fmt_set(&rec.members),
                        )?;
                    }
                }
            }
            let (quot, _) = quotient_rrng(m.ring(), &ann)?;
            let has_hom = exists_nonzero_rhom(&m, &quot, &caps)?;
            ensure(
                (type3 > 0) == has_hom,
                "Type3 nonempty iff Hom_R(I, R/ann) ≠ 0",
                format!("type3 count {type3}, hom exists {has_hom}"),
            )?;
            if m.ring().order() == 2 && m.i_order() == 2 {
                ensure(all.len() == 4, "E(F_2, F_2-ring) has 4 ideals", format!("{}", all.len()))?;
            }
            Ok(())
        });
        checks.push((inst.id.to_string(), f));
    }
    Ok(run_parallel("idealdescription", checks))
}

fn suite_semiprimeoversemiprime(caps: Caps) -> Result<VerificationReport> {
    minimal_checks("semiprimeoversemiprime", caps, |m, caps| {
        let x = ideal_extension(&m, &caps)?;
        let lhs = is_semiprime(&x.ext);
        let rhs = is_semiprime(m.ring()) && !m.has_zero_product();
        ensure(
            lhs == rhs,
            "E(R,I) semiprime iff R semiprime and I² ≠ 0",
            format!("E semiprime: {lhs}, R semiprime: {}, I² ≠ 0: {}", is_semiprime(m.ring()), !m.has_zero_product()),
        )
    })
}

fn suite_primeidealext(caps: Caps) -> Result<VerificationReport> {
    minimal_checks("primeidealext", caps, |m, caps| {
        let x = ideal_extension(&m, &caps)?;
        let c1 = is_prime(&x.ext);
        let ann_e_right = x
            .ext
            .elements()
            .filter(|&e| x.i_image.iter().all(|i| x.ext.mul(i, e) == 0))
            .collect::<Vec<_>>();
        let ann_e_left = x
            .ext
            .elements()
            .filter(|&e| x.i_image.iter().all(|i| x.ext.mul(e, i) == 0))
            .collect::<Vec<_>>();
        let c2 = ann_e_right == [0] && ann_e_left == [0];
        let ann = annihilators(&m).two_sided;
        let c3 = !m.has_zero_product()
            && ann.is_zero()
            && hom_count_to_regular(&m, &caps)? == 1;
        ensure(
            c1 == c2 && c2 == c3,
            "three-way primality equivalence for E(R,I)",
            format!("prime {c1}, ann-in-E zero {c2}, hom-side {c3}"),
        )?;
        if c1 {
            ensure(is_prime(m.ring()), "E prime forces R prime", String::new())?;
            ensure(
                little_ideal(&x.ext, &caps)?.is_some(),
                "prime E(R,I) is subdirectly irreducible",
                String::new(),
            )?;
        }
        Ok(())
    })
}

fn suite_annideals(caps: Caps) -> Result<VerificationReport> {
    minimal_checks("annideals", caps, |m, caps| {
        let x = ideal_extension(&m, &caps)?;
        let ann = annihilators(&m).two_sided;
        let ann_in_e = ElementSet::new(ann.iter().map(|a| x.pair(a, 0)).collect());
        let quo = quotient_ring(&x.ext, &ann_in_e)?;
        let sp = is_semiprime(&quo.ring);
        ensure(
            sp == !m.has_zero_product(),
            "ann_R(I) ⊕ 0 semiprime iff I² ≠ 0",
            format!("quotient semiprime {sp}"),
        )?;
        let (quot_rr, _) = quotient_rrng(m.ring(), &ann)?;
        let no_hom = !exists_nonzero_rhom(&m, &quot_rr, &caps)?;
        let pr = is_prime(&quo.ring);
        ensure(
            pr == (!m.has_zero_product() && no_hom),
            "ann_R(I) ⊕ 0 prime iff I² ≠ 0 and Hom(I, R/ann) = 0",
            format!("quotient prime {pr}, hom-free {no_hom}"),
        )?;
        if pr {
            ensure(
                little_ideal(&quo.ring, &caps)?.is_some(),
                "prime quotient is subdirectly irreducible",
                String::new(),
            )?;
        }
        Ok(())
    })
}

fn suite_thethreetypes(caps: Caps) -> Result<VerificationReport> {
    minimal_checks("thethreetypes", caps, |m, caps| {
        let x = ideal_extension(&m, &caps)?;
        let ann_e = ann_in_ext(&x);
        let t = rrng_type(&m, &caps)?;
        let contains_i = x.i_image.is_subset_of(&ann_e);
        let inside_r = ann_e.iter().all(|e| x.i_part(e) == 0);
        let trivial_meet = ann_e.intersect(&x.i_image).is_zero();
        ensure(
            (t == RrngType::T1) == contains_i,
            "T1 iff ann_E(I) ⊇ I",
            format!("type {t}, ann_E = {}", fmt_set(&ann_e)),
        )?;
        ensure(
            (t == RrngType::T2) == inside_r,
            "T2 iff ann_E(I) ⊆ R ⊕ 0",
            format!("type {t}, ann_E = {}", fmt_set(&ann_e)),
        )?;
        ensure(
            (t == RrngType::T3) == (trivial_meet && !inside_r),
            "T3 iff ann_E(I) meets I trivially and leaves R ⊕ 0",
            format!("type {t}, ann_E = {}", fmt_set(&ann_e)),
        )
    })
}

fn suite_subdirectprime(caps: Caps) -> Result<VerificationReport> {
    minimal_checks("subdirectprime", caps, |m, caps| {
        if rrng_type(&m, &caps)? != RrngType::T3 {
            return Ok(()); // vacuous for T1/T2 instances
        }
        let ann = annihilators(&m).two_sided;
        let quo = quotient_ring(m.ring(), &ann)?;
        ensure(is_prime(&quo.ring), "R/ann is prime", fmt_set(&ann))?;
        let li = little_ideal(&quo.ring, &caps)?;
        let Some(li) = li else {
            return Err(CheckFail {
                assertion: "R/ann is subdirectly irreducible".into(),
                witness: "no little ideal".into(),
                skipped: false,
            });
        };
        let proj_map: Vec<usize> = m.ring().elements().map(|a| quo.proj(a)).collect();
        let (li_rrng, _) =
            rrng_from_invariant_set(m.ring(), quo.ring.rng(), &proj_map, &li)?;
        ensure(
            r_isomorphic(&m, &li_rrng, &caps)?,
            "I is R-isomorphic to the little ideal of R/ann",
            fmt_set(&li),
        )
    })
}

/// C_I(R): elements of I commuting with the whole base action.
fn centralizer_in_rrng(m: &RRng) -> ElementSet {
    ElementSet::new(
        (0..m.i_order())
            .filter(|&x| {
                (0..m.ring().rank()).all(|b| {
                    let e = m.ring().carrier().basis_elem(b);
                    m.act_left(e, x) == m.act_right(x, e)
                })
            })
            .collect(),
    )
}

fn suite_centralstuff(caps: Caps) -> Result<VerificationReport> {
    minimal_checks("centralstuff", caps, |m, caps| {
        let x = ideal_extension(&m, &caps)?;
        let central = is_central_extension(&x.r_embed, &caps)?;
        let c_i = centralizer_in_rrng(&m);
        ensure(
            central == (c_i.len() > 1),
            "E(R,I) central over R iff C_I(R) ≠ 0",
            format!("central {central}, C_I(R) = {}", fmt_set(&c_i)),
        )?;
        let z = center(&x.ext);
        for i in c_i.iter() {
            ensure(
                z.contains(x.pair(0, i)),
                "C_I(R) lies in Z(E(R,I))",
                format!("element {i}"),
            )?;
        }
        Ok(())
    })
}

fn suite_brauer(caps: Caps) -> Result<VerificationReport> {
    let mut checks: Vec<(String, CheckFn)> = Vec::new();
    let f2 = cat::gf(2)?;
    let f2xf2 = cat::product_ring(&[f2.clone(), f2])?;
    let e10 = f2xf2.carrier().index_of(&[1, 0]);
    checks.push((
        "f2xf2/left-factor".into(),
        Box::new(move || {
            let i = principal_ideal(&f2xf2, e10, &caps)?;
            let rep = brauer_report(&f2xf2, &i, &caps)?;
            ensure(rep.consistent(), "three conditions agree", format!("{rep:?}"))?;
            ensure(
                rep.holds() && rep.idempotent == Some(e10),
                "direct factor: all hold with e = (1,0)",
                format!("{rep:?}"),
            )
        }),
    ));
    let m2 = cat::mat(2, 2)?;
    let m2_whole = m2.clone();
    checks.push((
        "m2f2/whole".into(),
        Box::new(move || {
            let i = ElementSet::new(m2_whole.elements().collect());
            let rep = brauer_report(&m2_whole, &i, &caps)?;
            ensure(rep.consistent(), "three conditions agree", format!("{rep:?}"))?;
            ensure(
                rep.holds() && rep.idempotent == Some(m2_whole.unity()),
                "simple ring: all hold with e = 1",
                format!("{rep:?}"),
            )
        }),
    ));
    checks.push((
        "e-m2f2/min-ideal".into(),
        Box::new(move || {
            let x = ideal_extension(&regular_rrng(&m2), &caps)?;
            let rep = brauer_report(&x.ext, &x.i_image, &caps)?;
            ensure(rep.consistent(), "three conditions agree", format!("{rep:?}"))?;
            // E(R,R) ≅ R × R, so 0 ⊕ I is a central direct factor
            ensure(
                rep.holds() && rep.idempotent.is_some() && rep.direct_summand,
                "0 ⊕ I is a direct factor of E(R,R)",
                format!("{rep:?}"),
            )
        }),
    ));
    // consistency across every applicable (ring, minimal ideal) pair
    for (rid, ring) in corpus_rings(&caps)? {
        let f: CheckFn = Box::new(move || {
            let ideals = enumerate_ideals(&ring, &caps)?;
            for i in ideals.iter().filter(|i| !i.is_zero()) {
                let minimal = !ideals
                    .iter()
                    .any(|j| !j.is_zero() && j != i && j.is_subset_of(i));
                let sq_nonzero = i.iter().any(|x| i.iter().any(|y| ring.mul(x, y) != 0));
                if !(minimal && sq_nonzero) {
                    continue;
                }
                let rep = brauer_report(&ring, i, &caps)?;
                ensure(
                    rep.consistent(),
                    "three conditions agree on every minimal ideal with I² ≠ 0",
                    format!("ideal {} -> {rep:?}", fmt_set(i)),
                )?;
            }
            Ok(())
        });
        checks.push((format!("consistency/{rid}"), f));
    }
    Ok(run_parallel("brauer", checks))
}

fn corpus_rings(caps: &Caps) -> Result<Vec<(&'static str, FiniteRing)>> {
    let f2 = cat::gf(2)?;
    Ok(vec![
        ("f2", f2.clone()),
        ("f3", cat::gf(3)?),
        ("f4", cat::gf(4)?),
        ("f8", cat::gf(8)?),
        ("f9", cat::gf(9)?),
        ("z4", cat::zmod(4)?),
        ("z9", cat::zmod(9)?),
        ("f2xf2", cat::product_ring(&[f2.clone(), f2])?),
        ("t2f2", cat::tri(2, 2)?),
        ("m2f2", cat::mat(2, 2)?),
        ("e-z4", ideal_extension(&cat::ideal_as_rrng(&cat::zmod(4)?, 2, caps)?, caps)?.ext),
    ])
}

fn suite_primecenter(caps: Caps) -> Result<VerificationReport> {
    let rings = corpus_rings(&caps)?;
    let checks: Vec<(String, CheckFn)> = rings
        .into_iter()
        .map(|(rid, ring)| {
            let f: CheckFn = Box::new(move || {
                if !is_prime(&ring) {
                    return Ok(()); // the corollary concerns prime rings
                }
                let li = little_ideal(&ring, &caps)?;
                let Some(li) = li else {
                    return Err(CheckFail {
                        assertion: "finite prime ring is subdirectly irreducible".into(),
                        witness: "no little ideal".into(),
                        skipped: false,
                    });
                };
                let simple = enumerate_ideals(&ring, &caps)?.len() == 2;
                let meets = li.intersect(&center(&ring)).len() > 1;
                ensure(
                    meets == simple,
                    "little ideal meets the center iff the ring is simple",
                    format!("meets {meets}, simple {simple}"),
                )?;
                // at finite scale every prime ring is artinian hence simple
                ensure(simple, "finite prime rings are simple", fmt_set(&li))
            });
            (rid.to_string(), f)
        })
        .collect();
    Ok(run_parallel("primecenter", checks))
}

fn suite_maincentral(caps: Caps) -> Result<VerificationReport> {
    minimal_checks("maincentral", caps, |m, caps| {
        let r = m.ring();
        let ann = annihilators(&m).two_sided;
        let (quot_rr, _) = quotient_rrng(r, &ann)?;
        let c1 = r_isomorphic(&m, &quot_rr, &caps)?;
        let c2 = find_unity(m.i_rng()).is_some();
        let c3 = (1..m.i_order())
            .any(|e| m.i_rng().mul(e, e) == e && (0..m.i_order()).all(|x| m.i_rng().mul(e, x) == m.i_rng().mul(x, e)));
        let c4 = enumerate_homs(&regular_rrng(r), &m, HomKind::RngHom, Some(2), &caps)?.len() > 1;
        let c5 = exists_nonzero_rhom(&m, &quot_rr, &caps)? && is_maximal_ideal(r, &ann, &caps)?;
        let x = ideal_extension(&m, &caps)?;
        let c6 = is_central_extension(&x.r_embed, &caps)? && !m.has_zero_product();
        ensure(
            c1 == c2 && c2 == c3 && c3 == c4 && c4 == c5 && c5 == c6,
            "six centrality conditions agree",
            format!("[{c1},{c2},{c3},{c4},{c5},{c6}]"),
        )
    })
}

fn suite_centralchar(caps: Caps) -> Result<VerificationReport> {
    minimal_checks("centralchar", caps, |m, caps| {
        let x = ideal_extension(&m, &caps)?;
        let central = is_central_extension(&x.r_embed, &caps)?;
        let ann = annihilators(&m).two_sided;
        let (quot_rr, _) = quotient_rrng(m.ring(), &ann)?;
        let bimod_iso = r_isomorphism(&m, &quot_rr, HomKind::BimoduleHom, &caps)?.is_some();
        ensure(
            central == bimod_iso,
            "E central iff I ≅ R/ann as bimodules",
            format!("central {central}, bimodule-iso {bimod_iso}"),
        )?;
        if central {
            ensure(
                is_maximal_ideal(m.ring(), &ann, &caps)?,
                "centrality forces ann_R(I) maximal",
                fmt_set(&ann),
            )?;
        }
        Ok(())
    })
}

fn suite_semiprimeovercentral(caps: Caps) -> Result<VerificationReport> {
    let corpus = embedding_corpus(&caps)?;
    let checks: Vec<(String, CheckFn)> = corpus
        .into_iter()
        .map(|inst| {
            let f: CheckFn = Box::new(move || {
                if !is_central_extension(&inst.emb, &caps)? {
                    return Ok(()); // only central extensions are in scope here
                }
                if is_semiprime(&inst.emb.big) {
                    ensure(
                        is_semiprime(&inst.emb.small),
                        "big semiprime forces small semiprime under a central extension",
                        String::new(),
                    )?;
                }
                if is_prime(&inst.emb.big) {
                    ensure(
                        is_prime(&inst.emb.small),
                        "big prime forces small prime under a central extension",
                        String::new(),
                    )?;
                }
                Ok(())
            });
            (inst.id.to_string(), f)
        })
        .collect();
    Ok(run_parallel("semiprimeovercentral", checks))
}

fn suite_partialreduction(caps: Caps) -> Result<VerificationReport> {
    let corpus = embedding_corpus(&caps)?;
    let checks: Vec<(String, CheckFn)> = corpus
        .into_iter()
        .map(|inst| {
            let f: CheckFn = Box::new(move || {
                let emb = &inst.emb;
                let rad_b = prime_radical(&emb.big, &caps)?;
                let image = emb.image();
                if rad_b.is_subset_of(&image) {
                    return Ok(()); // hypothesis Nil_*(S) ⊄ R not met
                }
                let rad_s = prime_radical(&emb.small, &caps)?;
                let contracted = ElementSet::new(
                    image
                        .iter()
                        .filter(|&x| rad_b.contains(x))
                        .map(|x| emb.preimage(x).expect("image element"))
                        .collect(),
                );
                ensure(
                    contracted == rad_s,
                    "Nil_*(R) = Nil_*(S) ∩ R",
                    format!("contracted {} radical {}", fmt_set(&contracted), fmt_set(&rad_s)),
                )?;
                let quo = quotient_ring(&emb.small, &rad_s)?;
                // the constructed surjection: s = r + t with t in Nil_*(S)
                let mut map = vec![usize::MAX; emb.big.order()];
                for s in emb.big.elements() {
                    for r in emb.small.elements() {
                        if rad_b.contains(emb.big.sub(s, emb.apply(r))) {
                            map[s] = quo.proj(r);
                            break;
                        }
                    }
                    if map[s] == usize::MAX {
                        return Err(CheckFail {
                            assertion: "R + Nil_*(S) = S".into(),
                            witness: format!("element {s} has no decomposition"),
                            skipped: false,
                        });
                    }
                }
                for a in emb.big.elements() {
                    for b in emb.big.elements() {
                        ensure(
                            map[emb.big.add(a, b)] == quo.ring.add(map[a], map[b])
                                && map[emb.big.mul(a, b)] == quo.ring.mul(map[a], map[b]),
                            "decomposition map is a ring homomorphism",
                            format!("pair ({a},{b})"),
                        )?;
                    }
                }
                let kernel: Vec<usize> =
                    emb.big.elements().filter(|&s| map[s] == 0).collect();
                ensure(
                    ElementSet::new(kernel) == rad_b,
                    "kernel of the surjection is Nil_*(S), so S/Nil_* ≅ R/Nil_*",
                    String::new(),
                )?;
                let mut hit = vec![false; quo.ring.order()];
                for &q in &map {
                    hit[q] = true;
                }
                ensure(hit.iter().all(|&h| h), "surjection is onto R/Nil_*(R)", String::new())
            });
            (inst.id.to_string(), f)
        })
        .collect();
    Ok(run_parallel("partialreduction", checks))
}

fn suite_primeext(caps: Caps) -> Result<VerificationReport> {
    let corpus = classification_corpus(&caps)?;
    let mut checks: Vec<(String, CheckFn)> = corpus
        .iter()
        .cloned()
        .map(|inst| {
            let f: CheckFn = Box::new(move || {
                let t = classify_minimal_extension(&inst.emb, &caps)?;
                ensure(
                    Some(t.tag()) == inst.expected,
                    "classification matches the expected tag",
                    format!("got {}, expected {:?}", t.tag(), inst.expected),
                )?;
                let prime = is_prime(&inst.emb.big);
                let semi = is_semiprime(&inst.emb.big);
                let side_ok = match &t {
                    ExtensionType::P | ExtensionType::Pi { .. } => prime,
                    ExtensionType::Sr { .. } | ExtensionType::Si { .. } => semi && !prime,
                    ExtensionType::N { .. } => !semi,
                };
                ensure(
                    side_ok,
                    "tag's prime/semiprime side conditions hold independently",
                    format!("tag {}, prime {prime}, semiprime {semi}", t.tag()),
                )?;
                // witness stability: recovery from any admissible ideal gives
                // R-isomorphic bimodule-rngs
                let image = inst.emb.image();
                let js: Vec<ElementSet> = enumerate_ideals(&inst.emb.big, &caps)?
                    .into_iter()
                    .filter(|j| !j.is_zero() && j.intersect(&image).is_zero())
                    .collect();
                if js.len() > 1 {
                    let first = recover_ideal_extension(&inst.emb, &js[0], &caps)?.rrng;
                    for j in &js[1..] {
                        let other = recover_ideal_extension(&inst.emb, j, &caps)?.rrng;
                        ensure(
                            r_isomorphic(&first, &other, &caps)?,
                            "witness is stable across admissible ideal choices",
                            fmt_set(j),
                        )?;
                    }
                }
                Ok(())
            });
            (inst.id.to_string(), f)
        })
        .collect();
    let expected_tags: Vec<(&'static str, Option<&'static str>)> =
        corpus.iter().map(|i| (i.id, i.expected)).collect();
    checks.push((
        "census".into(),
        Box::new(move || {
            let count = |t: &str| expected_tags.iter().filter(|(_, e)| *e == Some(t)).count();
            ensure(
                count("P") > 0 && count("SI") > 0 && count("N") > 0,
                "P, SI, N are realized at finite scale",
                format!("P {}, SI {}, N {}", count("P"), count("SI"), count("N")),
            )?;
            ensure(
                count("PI") == 0 && count("SR") == 0,
                "PI and SR are empty at finite scale (prime artinian = simple)",
                format!("PI {}, SR {}", count("PI"), count("SR")),
            )
        }),
    ));
    Ok(run_parallel("primeext", checks))
}

fn suite_simplechar(caps: Caps) -> Result<VerificationReport> {
    let corpus = classification_corpus(&caps)?;
    let mut checks: Vec<(String, CheckFn)> = Vec::new();
    for inst in corpus {
        let simple = enumerate_ideals(&inst.emb.small, &caps)?.len() == 2;
        if !simple {
            continue;
        }
        let f: CheckFn = Box::new(move || {
            let t = classify_minimal_extension(&inst.emb, &caps)?;
            match &t {
                ExtensionType::Sr { .. } => Err(CheckFail {
                    assertion: "simple rings admit no SR extensions".into(),
                    witness: inst.id.to_string(),
                    skipped: false,
                }),
                ExtensionType::Si { prime_ideal, .. } => {
                    ensure(
                        prime_ideal.is_zero(),
                        "SI over a simple ring has P = 0",
                        fmt_set(prime_ideal),
                    )?;
                    let model = cat::product_ring(&[
                        inst.emb.small.clone(),
                        inst.emb.small.clone(),
                    ])?;
                    ensure(
                        ring_isomorphic(&inst.emb.big, &model),
                        "SI over a simple ring is R × R",
                        String::new(),
                    )
                }
                ExtensionType::N { m } => {
                    ensure(
                        is_minimal_rrng(m)?,
                        "N-witness is a simple bimodule",
                        String::new(),
                    )?;
                    let central = is_central_extension(&inst.emb, &caps)?;
                    let reg = regular_rrng(&inst.emb.small);
                    let biso =
                        r_isomorphism(m, &reg, HomKind::BimoduleHom, &caps)?.is_some();
                    ensure(
                        central == biso,
                        "N central iff M ≅ R as bimodules",
                        format!("central {central}, bimodule-iso {biso}"),
                    )
                }
                ExtensionType::Pi { .. } => {
                    let proper: Vec<ElementSet> = enumerate_ideals(&inst.emb.big, &caps)?
                        .into_iter()
                        .filter(|j| !j.is_zero() && j.len() != inst.emb.big.order())
                        .collect();
                    ensure(
                        proper.len() == 1,
                        "PI over a simple ring has a unique proper nonzero ideal",
                        format!("{} proper ideals", proper.len()),
                    )
                }
                ExtensionType::P => Ok(()),
            }
        });
        checks.push((inst.id.to_string(), f));
    }
    Ok(run_parallel("simplechar", checks))
}

fn suite_succinctcentral(caps: Caps) -> Result<VerificationReport> {
    let corpus = classification_corpus(&caps)?;
    let checks: Vec<(String, CheckFn)> = corpus
        .into_iter()
        .map(|inst| {
            let f: CheckFn = Box::new(move || {
                let central = is_central_extension(&inst.emb, &caps)?;
                let res = classify_central(&inst.emb, &caps);
                if !central {
                    return ensure(
                        matches!(res, Err(Error::NotCentral)),
                        "non-central extensions are rejected",
                        format!("{res:?}"),
                    );
                }
                match res? {
                    CentralType::P => ensure(
                        inst.expected == Some("P"),
                        "central classification agrees with the base tag",
                        format!("expected {:?}", inst.expected),
                    ),
                    CentralType::Si { m, model, iso } => {
                        ensure(
                            inst.expected == Some("SI"),
                            "central classification agrees with the base tag",
                            format!("expected {:?}", inst.expected),
                        )?;
                        ensure(
                            is_maximal_ideal(&inst.emb.small, &m, &caps)?,
                            "M is a maximal ideal",
                            fmt_set(&m),
                        )?;
                        verify_base_fixing_iso(&inst.emb, &model, &iso)
                    }
                    CentralType::N { m, model, iso } => {
                        ensure(
                            inst.expected == Some("N"),
                            "central classification agrees with the base tag",
                            format!("expected {:?}", inst.expected),
                        )?;
                        ensure(
                            is_maximal_ideal(&inst.emb.small, &m, &caps)?,
                            "M is a maximal ideal",
                            fmt_set(&m),
                        )?;
                        verify_base_fixing_iso(&inst.emb, &model, &iso)
                    }
                }
            });
            (inst.id.to_string(), f)
        })
        .collect();
    Ok(run_parallel("succinctcentral", checks))
}

fn verify_base_fixing_iso(emb: &EmbeddedSubring, model: &FiniteRing, iso: &[usize]) -> Check {
    ensure(is_bijective(iso, model.order()), "witness is a bijection", String::new())?;
    for a in emb.big.elements() {
        for b in emb.big.elements() {
            ensure(
                iso[emb.big.add(a, b)] == model.add(iso[a], iso[b])
                    && iso[emb.big.mul(a, b)] == model.mul(iso[a], iso[b]),
                "witness is a ring isomorphism",
                format!("pair ({a},{b})"),
            )?;
        }
    }
    ensure(
        iso[emb.big.unity()] == model.unity(),
        "witness preserves unity",
        String::new(),
    )
}

fn suite_no_finite_t2(caps: Caps) -> Result<VerificationReport> {
    minimal_checks("no-finite-T2", caps, |m, caps| {
        let t = rrng_type(&m, &caps)?;
        ensure(
            t != RrngType::T2,
            "no T2 bimodule-rng occurs at finite scale (finite prime = simple)",
            format!("type {t}"),
        )
    })
}

fn suite_order4_census(caps: Caps) -> Result<VerificationReport> {
    let f: CheckFn = Box::new(move || {
        let carrier = CarrierGroup::new(vec![2, 2])?;
        let mut rings: Vec<FiniteRing> = Vec::new();
        for a in 0..4usize {
            for b in 0..4usize {
                for c in 0..4usize {
                    for d in 0..4usize {
                        let Ok(rng) = build_rng(carrier.clone(), vec![a, b, c, d]) else {
                            continue;
                        };
                        let Some(u) = find_unity(&rng) else { continue };
                        rings.push(FiniteRing::new(rng, u)?);
                    }
                }
            }
        }
        let mut classes: Vec<FiniteRing> = Vec::new();
        for r in rings {
            if !classes.iter().any(|c| ring_isomorphic(c, &r)) {
                classes.push(r);
            }
        }
        ensure(
            classes.len() == 3,
            "exactly 3 isomorphism classes of unital order-4 rings of characteristic 2",
            format!("{} classes", classes.len()),
        )?;
        let f2 = cat::gf(2)?;
        let expected = vec![
            ("F_4", cat::gf(4)?),
            ("F_2 × F_2", cat::product_ring(&[f2.clone(), f2.clone()])?),
            (
                "F_2[x]/(x²)",
                trivial_extension(&cat::zero_bimodule(&f2, 0, &caps)?, &caps)?.ext,
            ),
        ];
        for (name, model) in &expected {
            ensure(
                classes.iter().any(|c| ring_isomorphic(c, model)),
                "census realizes the Ferrand–Olivier list",
                format!("missing {name}"),
            )?;
        }
        // each class is a minimal extension of F_2 (embedded via unity)
        for class in &classes {
            let map: Vec<usize> = vec![0, class.unity()];
            let emb = EmbeddedSubring::new(class.clone(), f2.clone(), map)?;
            ensure(
                is_maximal_subring(&emb, &caps)?,
                "every order-4 class is a minimal extension of F_2",
                String::new(),
            )?;
        }
        Ok(())
    });
    Ok(run_parallel("order4-census", vec![("census".into(), f)]))
}

fn suite_finiteindex_witness(caps: Caps) -> Result<VerificationReport> {
    let f: CheckFn = Box::new(move || {
        let emb = cat::regular_embed(4)?;
        ensure(
            is_maximal_subring(&emb, &caps)?,
            "F_4 is a maximal subring of M_2(F_2)",
            String::new(),
        )?;
        let cent = centralizer(&emb.big, &emb.image());
        ensure(
            cent == emb.image(),
            "centralizer of the image is the image",
            fmt_set(&cent),
        )?;
        ensure(is_prime(&emb.big), "M_2(F_2) is prime", String::new())?;
        let noncomm = emb
            .big
            .elements()
            .any(|a| emb.big.elements().any(|b| emb.big.mul(a, b) != emb.big.mul(b, a)));
        ensure(noncomm, "M_2(F_2) is noncommutative", String::new())?;
        let one = emb.big.unity();
        let nondiv = (1..emb.big.order())
            .any(|a| !emb.big.elements().any(|b| emb.big.mul(a, b) == one && emb.big.mul(b, a) == one));
        ensure(nondiv, "M_2(F_2) is not a division ring", String::new())?;
        ensure(
            enumerate_ideals(&emb.big, &caps)?.len() == 2,
            "M_2(F_2) is simple",
            String::new(),
        )
    });
    Ok(run_parallel("finiteindex-witness", vec![("regular_embed(4)".into(), f)]))
}

fn suite_bergman_levels(caps: Caps) -> Result<VerificationReport> {
    let _ = caps;
    let checks: Vec<(String, CheckFn)> = (1..=2u32)
        .map(|n| {
            let f: CheckFn = Box::new(move || {
                let lvl = cat::bergman_level(n, 2)?;
                let field = lvl.field.clone();
                let basis = lvl.domain_basis();
                let mut identity = cat::FieldMat::zero(lvl.dim);
                for i in 0..lvl.dim {
                    identity.set(i, i, field.unity());
                }
                let mut target_identity = cat::FieldMat::zero(2 * lvl.dim);
                for i in 0..2 * lvl.dim {
                    target_identity.set(i, i, field.unity());
                }
                ensure(
                    lvl.f(&identity) == target_identity,
                    "inflation is unital",
                    String::new(),
                )?;
                ensure(
                    lvl.e.mul(&lvl.e, &field) == lvl.e,
                    "E is idempotent",
                    String::new(),
                )?;
                for (ai, a) in basis.iter().enumerate() {
                    let fa = lvl.f(a);
                    let fae = fa.mul(&lvl.e, &field);
                    let efa = lvl.e.mul(&fa, &field);
                    let efae = efa.mul(&lvl.e, &field);
                    ensure(
                        fae == efa && efa == efae,
                        "f(A)E = Ef(A) = Ef(A)E on every basis matrix",
                        format!("basis index {ai}"),
                    )?;
                    for (bi, b) in basis.iter().enumerate() {
                        let ab = a.mul(b, &field);
                        ensure(
                            lvl.f(&ab) == fa.mul(&lvl.f(b), &field),
                            "f is multiplicative on basis pairs",
                            format!("pair ({ai},{bi})"),
                        )?;
                        let gab = lvl.g(&ab);
                        let fagb = fa.mul(&lvl.g(b), &field);
                        let gagb = lvl.g(a).mul(&lvl.g(b), &field);
                        let gafb = lvl.g(a).mul(&lvl.f(b), &field);
                        ensure(
                            gab == fagb && fagb == gagb && gagb == gafb,
                            "g(AB) = f(A)g(B) = g(A)g(B) = g(A)f(B) on basis pairs",
                            format!("pair ({ai},{bi})"),
                        )?;
                    }
                }
                Ok(())
            });
            (format!("level-{n}"), f)
        })
        .collect();
    Ok(run_parallel("bergman-levels", checks))
}
