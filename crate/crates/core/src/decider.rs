//! Profinite-equivalence decisions for Seifert fibre spaces and 2-orbifolds.
//!
//! Closed symbols are separated by geometry, first homology, base orbifold,
//! `|e|` and finally the class vector `(b; q_1 mod p_1, …)`. With `e = 0`
//! over a hyperbolic base, two symbols whose class vectors differ by a unit
//! `k` have isomorphic profinite completions without being homeomorphic.
//! Spherical cases are compared through finite-quotient fingerprints only.

use std::borrow::Cow;
use std::collections::BTreeSet;

use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fp::catalogue::{default_catalogue, FiniteGroupTable};
use crate::fp::fingerprint::{fingerprint, QuotientFingerprint};
use crate::invariants::{
    euler_number, first_homology, geometry, orbifold_euler_characteristic, orbifold_presentation, presentation, Geometry,
};
use crate::presentation::Presentation;
use crate::symbol::{BaseSurface, FibrePair, OrbifoldData, SeifertSymbol};

/// Default fingerprint depth used for spherical comparisons.
pub const DEFAULT_MAX_INDEX: usize = 5;
pub const DEFAULT_CATALOGUE_ORDER: usize = 24;

/// Class vector `(b; (p_i, q_i))` on which units act by multiplication.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CohomClass {
    /// `None` for bounded symbols, which carry no obstruction term.
    pub b: Option<i64>,
    pub residues: Vec<(i64, i64)>,
}

impl CohomClass {
    /// Multiplies the class by `k`: residues become `k q_i mod p_i` and `b`
    /// absorbs the carries so that the Euler number is multiplied by `k`.
    pub fn scale(&self, k: i64) -> CohomClass {
        let residues = self.residues.iter().map(|&(p, q)| (p, (k * q).rem_euclid(p))).collect();
        let b = self.b.map(|b| k * b + self.residues.iter().map(|&(p, q)| (k * q).div_euclid(p)).sum::<i64>());
        CohomClass { b, residues }
    }

    pub fn sorted_residues(&self) -> Vec<(i64, i64)> {
        let mut r = self.residues.clone();
        r.sort_unstable();
        r
    }

    pub fn to_symbol(&self, base: BaseSurface) -> SeifertSymbol {
        let fibres = self.residues.iter().map(|&(p, q)| FibrePair::new(p, q)).collect();
        SeifertSymbol::new(self.b.unwrap_or(0), base, fibres).normalize()
    }

    /// lcm of the moduli; units modulo it act on the class.
    pub fn modulus(&self) -> i64 {
        self.residues.iter().fold(1, |acc, &(p, _)| acc.lcm(&p))
    }
}

pub fn class_vector(m: &SeifertSymbol) -> CohomClass {
    let n = m.normalize();
    CohomClass {
        b: n.is_closed().then_some(n.b),
        residues: n.fibres.iter().map(|f| (f.alpha, f.beta)).collect(),
    }
}

/// Units modulo `l` in increasing order.
fn units(l: i64) -> impl Iterator<Item = i64> {
    (1..l.max(2)).filter(move |k| k.gcd(&l) == 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Separator {
    BaseOrbifold,
    EulerNumber,
    H1,
    ClassVector,
}

impl Separator {
    pub fn tag(&self) -> &'static str {
        match self {
            Separator::BaseOrbifold => "base_orbifold",
            Separator::EulerNumber => "euler_number",
            Separator::H1 => "h1",
            Separator::ClassVector => "class_vector",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum VerdictKind {
    Homeomorphic,
    #[serde(rename = "hempel")]
    HempelEquivalent { k: i64 },
    NotEquivalent { separator: Separator },
    /// `inconclusive` is false only when fingerprints tell the groups apart.
    #[serde(rename = "finite_group")]
    FiniteFundamentalGroup { inconclusive: bool },
    Equivalent { k: i64 },
}

impl VerdictKind {
    pub fn tag(&self) -> &'static str {
        match self {
            VerdictKind::Homeomorphic => "homeomorphic",
            VerdictKind::HempelEquivalent { .. } => "hempel",
            VerdictKind::NotEquivalent { .. } => "not_equivalent",
            VerdictKind::FiniteFundamentalGroup { .. } => "finite_group",
            VerdictKind::Equivalent { .. } => "equivalent",
        }
    }

    /// True when the verdict asserts isomorphic profinite completions.
    pub fn asserts_equivalence(&self) -> bool {
        matches!(
            self,
            VerdictKind::Homeomorphic | VerdictKind::HempelEquivalent { .. } | VerdictKind::Equivalent { .. }
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    #[serde(flatten)]
    pub kind: VerdictKind,
    pub notes: String,
}

impl Verdict {
    fn new(kind: VerdictKind, notes: impl Into<String>) -> Self {
        Verdict { kind, notes: notes.into() }
    }

    fn not_equivalent(separator: Separator, notes: impl Into<String>) -> Self {
        Verdict::new(VerdictKind::NotEquivalent { separator }, notes)
    }

    pub fn separator(&self) -> Option<Separator> {
        match self.kind {
            VerdictKind::NotEquivalent { separator } => Some(separator),
            _ => None,
        }
    }

    pub fn k(&self) -> Option<i64> {
        match self.kind {
            VerdictKind::HempelEquivalent { k } | VerdictKind::Equivalent { k } => Some(k),
            _ => None,
        }
    }
}

/// Fingerprint depth for comparisons that fall back on finite quotients.
#[derive(Debug, Clone)]
pub struct DecideOptions {
    pub max_index: usize,
    /// `None` selects the shipped catalogue of groups of order at most 24.
    pub catalogue: Option<Vec<FiniteGroupTable>>,
}

impl Default for DecideOptions {
    fn default() -> Self {
        DecideOptions { max_index: DEFAULT_MAX_INDEX, catalogue: None }
    }
}

impl DecideOptions {
    pub fn catalogue(&self) -> Cow<'_, [FiniteGroupTable]> {
        match &self.catalogue {
            Some(c) => Cow::Borrowed(c),
            None => Cow::Owned(default_catalogue(DEFAULT_CATALOGUE_ORDER)),
        }
    }

    fn fingerprints(&self, p1: &Presentation, p2: &Presentation) -> Result<(QuotientFingerprint, QuotientFingerprint)> {
        let cat = self.catalogue();
        Ok((fingerprint(p1, self.max_index, &cat)?, fingerprint(p2, self.max_index, &cat)?))
    }
}

fn finite_group_verdict(p1: &Presentation, p2: &Presentation, opts: &DecideOptions, what: &str) -> Result<Verdict> {
    let (f1, f2) = opts.fingerprints(p1, p2)?;
    let diffs = f1.differences(&f2);
    let depth = format!("index <= {}, catalogue {}", f1.depth.max_index, f1.depth.catalogue_id);
    Ok(if diffs.is_empty() {
        Verdict::new(
            VerdictKind::FiniteFundamentalGroup { inconclusive: true },
            format!("{what}; fingerprints agree at depth ({depth}), which does not prove isomorphism"),
        )
    } else {
        Verdict::new(
            VerdictKind::FiniteFundamentalGroup { inconclusive: false },
            format!("{what}; fingerprints differ at depth ({depth}): {}", diffs[0]),
        )
    })
}

fn scale_symbol(m: &SeifertSymbol, k: i64) -> SeifertSymbol {
    class_vector(m).scale(k).to_symbol(m.base)
}

/// Decision for normalized closed symbols with equal geometry and H1, outside
/// the spherical, `S²×R` and Euclidean cases.
fn decide_by_class(n1: &SeifertSymbol, n2: &SeifertSymbol) -> Result<Verdict> {
    let (c1, c2) = (n1.canonical_form(), n2.canonical_form());
    if c1 == c2 {
        return Ok(Verdict::new(VerdictKind::Homeomorphic, format!("canonical form {c1}")));
    }
    let (o1, o2) = (n1.base_orbifold(), n2.base_orbifold());
    if o1 != o2 {
        return Ok(Verdict::not_equivalent(Separator::BaseOrbifold, format!("base orbifolds {o1} vs {o2}")));
    }
    let (e1, e2) = (euler_number(n1)?, euler_number(n2)?);
    if e1.abs() != e2.abs() {
        return Ok(Verdict::not_equivalent(Separator::EulerNumber, format!("Euler numbers {e1} vs {e2}")));
    }
    if !e1.is_zero() {
        return Ok(Verdict::not_equivalent(
            Separator::ClassVector,
            format!("e = {e1} is nonzero, so the symbol is rigid; canonical forms {c1} vs {c2}"),
        ));
    }
    let l = class_vector(n1).modulus();
    for k in units(l) {
        if scale_symbol(n1, k).canonical_form() == c2 {
            return Ok(Verdict::new(
                VerdictKind::HempelEquivalent { k },
                format!("e = 0 over a hyperbolic base; scaling the residues by k = {k} mod {l} maps {c1} to {c2}"),
            ));
        }
    }
    Ok(Verdict::not_equivalent(
        Separator::ClassVector,
        format!("no unit modulo {l} relates the class vectors of {c1} and {c2}"),
    ))
}

/// Decision for two closed symbols, using the default fingerprint depth
/// for spherical manifolds.
pub fn decide_closed(m1: &SeifertSymbol, m2: &SeifertSymbol) -> Result<Verdict> {
    decide_closed_with(m1, m2, &DecideOptions::default())
}

pub fn decide_closed_with(m1: &SeifertSymbol, m2: &SeifertSymbol, opts: &DecideOptions) -> Result<Verdict> {
    if !m1.is_closed() || !m2.is_closed() {
        return Err(Error::BoundedSymbol);
    }
    let (n1, n2) = (m1.normalize(), m2.normalize());
    let (c1, c2) = (n1.canonical_form(), n2.canonical_form());
    if c1 == c2 {
        return Ok(Verdict::new(VerdictKind::Homeomorphic, format!("canonical form {c1}")));
    }
    let (g1, g2) = (geometry(&n1), geometry(&n2));
    if g1 != g2 {
        let chi = |n: &SeifertSymbol| orbifold_euler_characteristic(&n.base_orbifold()).signum();
        let separator = if chi(&n1) != chi(&n2) { Separator::BaseOrbifold } else { Separator::EulerNumber };
        return Ok(Verdict::not_equivalent(separator, format!("geometries {g1} vs {g2}")));
    }
    let (p1, p2) = (presentation(&n1), presentation(&n2));
    if g1 == Geometry::S3 {
        return finite_group_verdict(&p1, &p2, opts, "S3 geometry: finite fundamental groups");
    }
    let (h1, h2) = (first_homology(&p1), first_homology(&p2));
    if h1 != h2 {
        let mut notes = format!("first homology {h1} vs {h2}");
        let (e1, e2) = (euler_number(&n1)?, euler_number(&n2)?);
        if n1.base_orbifold() == n2.base_orbifold() && e1.abs() != e2.abs() {
            notes.push_str(&format!("; Euler numbers {e1} vs {e2} also differ"));
        }
        return Ok(Verdict::not_equivalent(Separator::H1, notes));
    }
    if matches!(g1, Geometry::E3 | Geometry::S2xR) {
        return Ok(Verdict::new(
            VerdictKind::Homeomorphic,
            format!("{g1} geometry with equal first homology {h1}; these manifolds are determined by H1"),
        ));
    }
    let direct = decide_by_class(&n1, &n2)?;
    if n1.base.orientable || n2.base.orientable {
        return Ok(direct);
    }
    let (d1, d2) = (n1.orientation_double_cover()?, n2.orientation_double_cover()?);
    let lifted = decide_by_class(&d1, &d2)?;
    if direct.kind != lifted.kind {
        return Err(Error::Diagnostic(format!(
            "non-orientable base: direct verdict {} but double covers give {}",
            serde_json::to_string(&direct).unwrap_or_default(),
            serde_json::to_string(&lifted).unwrap_or_default()
        )));
    }
    let notes = format!(
        "{}; non-orientable base, the orientation double covers {} and {} give the same verdict",
        direct.notes,
        d1.canonical_form(),
        d2.canonical_form()
    );
    Ok(Verdict::new(direct.kind, notes))
}

/// Canonical forms of all symbols whose class vector is a unit multiple of
/// the input's. A singleton unless `e = 0` over a hyperbolic base.
pub fn hempel_partners(m: &SeifertSymbol) -> Result<BTreeSet<SeifertSymbol>> {
    if !m.is_closed() {
        return Err(Error::BoundedSymbol);
    }
    let n = m.normalize();
    let e = euler_number(&n)?;
    let chi = orbifold_euler_characteristic(&n.base_orbifold());
    if !e.is_zero() || chi.signum() != std::cmp::Ordering::Less {
        return Ok(BTreeSet::from([n.canonical_form()]));
    }
    let class = class_vector(&n);
    let ks: Vec<i64> = units(class.modulus()).collect();
    Ok(ks
        .into_par_iter()
        .map(|k| {
            let scaled = class.scale(k);
            // e = 0 forces Σ (k q_i mod p_i) / p_i to be an integer, and b_k is its negative
            let l = class.modulus();
            let numerator: i64 = scaled.residues.iter().map(|&(p, q)| q * (l / p)).sum();
            assert_eq!(numerator % l, 0, "scaled residues of an e = 0 class sum to an integer");
            assert_eq!(scaled.b, Some(-numerator / l));
            scaled.to_symbol(n.base).canonical_form()
        })
        .collect())
}

/// Dispatches to [`decide_closed_with`] or [`decide_bounded`].
pub fn decide(m1: &SeifertSymbol, m2: &SeifertSymbol, opts: &DecideOptions) -> Result<Verdict> {
    match (m1.is_closed(), m2.is_closed()) {
        (true, true) => decide_closed_with(m1, m2, opts),
        (false, false) => decide_bounded(m1, m2),
        _ => Err(Error::MixedBoundary),
    }
}

/// Decision for two bounded symbols, assuming their peripheral systems match.
pub fn decide_bounded(m1: &SeifertSymbol, m2: &SeifertSymbol) -> Result<Verdict> {
    if m1.is_closed() || m2.is_closed() {
        return Err(Error::ClosedSymbol);
    }
    let (n1, n2) = (m1.normalize(), m2.normalize());
    const HYPOTHESIS: &str = "assumes an isomorphism of peripheral systems";
    let (o1, o2) = (n1.base_orbifold(), n2.base_orbifold());
    if o1 != o2 {
        return Ok(Verdict::not_equivalent(
            Separator::BaseOrbifold,
            format!("base orbifolds {o1} vs {o2}; {HYPOTHESIS}"),
        ));
    }
    let (v1, v2) = (class_vector(&n1), class_vector(&n2));
    let target = v2.sorted_residues();
    let l = v1.modulus();
    for k in units(l) {
        if v1.scale(k).sorted_residues() == target {
            return Ok(Verdict::new(
                VerdictKind::Equivalent { k },
                format!("residues scale by k = {k} mod {l}; {HYPOTHESIS}"),
            ));
        }
    }
    Ok(Verdict::not_equivalent(
        Separator::ClassVector,
        format!("no unit modulo {l} maps the residues of {n1} to those of {n2}; {HYPOTHESIS}"),
    ))
}

/// Comparison of closed 2-orbifolds through their orbifold fundamental groups.
pub fn decide_orbifolds(o1: &OrbifoldData, o2: &OrbifoldData) -> Result<Verdict> {
    decide_orbifolds_with(o1, o2, &DecideOptions::default())
}

pub fn decide_orbifolds_with(o1: &OrbifoldData, o2: &OrbifoldData, opts: &DecideOptions) -> Result<Verdict> {
    o1.validate()?;
    o2.validate()?;
    if !o1.surface.is_closed() || !o2.surface.is_closed() {
        return Err(Error::OrbifoldBoundary);
    }
    if o1 == o2 {
        return Ok(Verdict::new(VerdictKind::Homeomorphic, format!("identical orbifold data {o1}")));
    }
    let (x1, x2) = (orbifold_euler_characteristic(o1), orbifold_euler_characteristic(o2));
    let (p1, p2) = (orbifold_presentation(o1), orbifold_presentation(o2));
    if x1.signum() == std::cmp::Ordering::Greater || x2.signum() == std::cmp::Ordering::Greater {
        return finite_group_verdict(&p1, &p2, opts, "positive orbifold Euler characteristic");
    }
    let (h1, h2) = (first_homology(&p1), first_homology(&p2));
    if h1 != h2 {
        return Ok(Verdict::not_equivalent(Separator::H1, format!("first homology {h1} vs {h2}")));
    }
    Ok(Verdict::not_equivalent(
        Separator::BaseOrbifold,
        format!("orbifolds {o1} vs {o2} differ although their first homology {h1} agrees"),
    ))
}

/// Agreement between a verdict and a fingerprint comparison at finite depth.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verification {
    pub fingerprints_equal: bool,
    pub consistent: bool,
    pub note: String,
}

pub fn cross_check(v: &Verdict, f1: &QuotientFingerprint, f2: &QuotientFingerprint) -> Verification {
    let diffs = f1.differences(f2);
    let equal = diffs.is_empty();
    let (consistent, note) = match (&v.kind, equal) {
        (k, false) if k.asserts_equivalence() => {
            (false, format!("verdict asserts equivalence but fingerprints differ: {}", diffs[0]))
        }
        (k, true) if k.asserts_equivalence() => (true, "fingerprints agree".to_string()),
        (VerdictKind::NotEquivalent { separator: Separator::H1 }, true) => {
            (false, "H1 separates the groups but the fingerprints agree".to_string())
        }
        (VerdictKind::NotEquivalent { .. }, true) => {
            (true, "fingerprints agree at this depth; the separator lies beyond it".to_string())
        }
        (VerdictKind::NotEquivalent { .. }, false) => (true, format!("fingerprints differ: {}", diffs[0])),
        (VerdictKind::FiniteFundamentalGroup { inconclusive }, _) => {
            let ok = *inconclusive == equal;
            let what = if equal { "agree" } else { "differ" };
            (ok, format!("fingerprints {what}"))
        }
        _ => unreachable!("all verdict kinds are covered"),
    };
    Verification { fingerprints_equal: equal, consistent, note }
}
