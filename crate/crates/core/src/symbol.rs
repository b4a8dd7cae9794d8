//! Seifert symbols and the moves on them that preserve the underlying manifold.
//!
//! A symbol `(b, Σ; (α_1, β_1), …, (α_r, β_r))` stores the obstruction term
//! `b`, the underlying surface of the base orbifold and the Seifert invariants
//! of the exceptional fibres. Bounded symbols carry `b = 0`.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseError, Result};
use crate::grammar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BaseSurface {
    pub genus: u32,
    pub orientable: bool,
    pub boundary_components: u32,
}

impl BaseSurface {
    pub fn orientable(genus: u32) -> Self {
        BaseSurface { genus, orientable: true, boundary_components: 0 }
    }

    pub fn non_orientable(genus: u32) -> Self {
        BaseSurface { genus, orientable: false, boundary_components: 0 }
    }

    pub fn with_boundary(self, boundary_components: u32) -> Self {
        BaseSurface { boundary_components, ..self }
    }

    pub fn is_closed(&self) -> bool {
        self.boundary_components == 0
    }

    /// Euler characteristic of the surface, boundary circles removed.
    pub fn euler_characteristic(&self) -> i64 {
        let g = self.genus as i64;
        let closed = if self.orientable { 2 - 2 * g } else { 2 - g };
        closed - self.boundary_components as i64
    }

    pub(crate) fn validate(&self) -> Result<(), ParseError> {
        if !self.orientable && self.genus == 0 {
            return Err(ParseError::NonOrientableGenusZero);
        }
        Ok(())
    }
}

/// Seifert invariants `(α, β)` of one exceptional fibre.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FibrePair {
    pub alpha: i64,
    pub beta: i64,
}

impl FibrePair {
    pub fn new(alpha: i64, beta: i64) -> Self {
        FibrePair { alpha, beta }
    }

    pub(crate) fn validate(&self) -> Result<(), ParseError> {
        if self.alpha < 2 {
            return Err(ParseError::ConeOrder(self.alpha));
        }
        if self.alpha.gcd(&self.beta) != 1 {
            return Err(ParseError::NotCoprime { alpha: self.alpha, beta: self.beta });
        }
        Ok(())
    }

    /// Converts raw fibred-solid-torus invariants `(p, q)` (rotation by
    /// `2πq/p`) into Seifert invariants `(p, β)` with `βq ≡ 1 mod p`.
    pub fn from_rotation(p: i64, q: i64) -> Result<Self, ParseError> {
        let raw = FibrePair::new(p, q);
        raw.validate()?;
        let beta = mod_inverse(q, p).expect("validated coprime");
        Ok(FibrePair::new(p, beta))
    }
}

/// Inverse of `a` modulo `m` in `[0, m)`, when it exists.
pub(crate) fn mod_inverse(a: i64, m: i64) -> Option<i64> {
    let egcd = a.rem_euclid(m).extended_gcd(&m);
    if egcd.gcd != 1 {
        return None;
    }
    Some(egcd.x.rem_euclid(m))
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SeifertSymbol {
    pub b: i64,
    pub base: BaseSurface,
    pub fibres: Vec<FibrePair>,
}

/// A 2-orbifold: underlying surface plus a multiset of cone orders (kept sorted).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OrbifoldData {
    pub surface: BaseSurface,
    pub cone_orders: Vec<u32>,
}

impl OrbifoldData {
    pub fn new(surface: BaseSurface, mut cone_orders: Vec<u32>) -> Self {
        cone_orders.sort_unstable();
        OrbifoldData { surface, cone_orders }
    }

    pub fn validate(&self) -> Result<(), ParseError> {
        self.surface.validate()?;
        if let Some(&p) = self.cone_orders.iter().find(|&&p| p < 2) {
            return Err(ParseError::ConeOrder(p as i64));
        }
        Ok(())
    }
}

impl SeifertSymbol {
    pub fn new(b: i64, base: BaseSurface, fibres: Vec<FibrePair>) -> Self {
        SeifertSymbol { b, base, fibres }
    }

    pub fn is_closed(&self) -> bool {
        self.base.is_closed()
    }

    pub fn num_fibres(&self) -> usize {
        self.fibres.len()
    }

    /// Checks the invariants a parsed symbol must satisfy.
    pub fn validate(&self) -> Result<(), ParseError> {
        self.base.validate()?;
        for f in &self.fibres {
            f.validate()?;
        }
        if !self.is_closed() && self.b != 0 {
            return Err(ParseError::BoundedObstruction(self.b));
        }
        Ok(())
    }

    /// Reduces every `β` into `(0, α)`, moving integer parts into `b`.
    ///
    /// Pairs with `α = 1` are folded into `b` and dropped. For bounded
    /// symbols the betas are only reduced and `b` is reset to 0. The fibre
    /// order is kept.
    pub fn normalize(&self) -> SeifertSymbol {
        let mut b = self.b;
        let mut fibres = Vec::with_capacity(self.fibres.len());
        for f in &self.fibres {
            let (quot, rem) = (f.beta.div_euclid(f.alpha), f.beta.rem_euclid(f.alpha));
            b += quot;
            if f.alpha > 1 {
                fibres.push(FibrePair::new(f.alpha, rem));
            }
        }
        if !self.is_closed() {
            b = 0;
        }
        SeifertSymbol { b, base: self.base, fibres }
    }

    pub fn is_normalized(&self) -> bool {
        *self == self.normalize()
    }

    /// Symbol of the same manifold with the fibre orientation reversed:
    /// `(b; (α_i, β_i)) ↦ (−b−r; (α_i, α_i−β_i))`, applied to the normal form.
    pub fn flip_orientation(&self) -> SeifertSymbol {
        let n = self.normalize();
        let fibres = n.fibres.iter().map(|f| FibrePair::new(f.alpha, f.alpha - f.beta)).collect();
        let b = if n.is_closed() { -n.b - n.fibres.len() as i64 } else { 0 };
        SeifertSymbol { b, base: n.base, fibres }
    }

    fn sorted(mut self) -> SeifertSymbol {
        self.fibres.sort_unstable();
        self
    }

    /// Normal form with sorted fibres, choosing the smaller of the symbol
    /// and its flip.
    pub fn canonical_form(&self) -> SeifertSymbol {
        let a = self.normalize().sorted();
        let b = a.flip_orientation().sorted();
        std::cmp::min(a, b)
    }

    /// Symbol of the index-2 cover induced by the orientation cover of a
    /// non-orientable base.
    ///
    /// The base becomes orientable of genus `g − 1` with twice the boundary
    /// circles, every exceptional fibre lifts to two with the same invariants,
    /// and `b` doubles so that the Euler number doubles.
    pub fn orientation_double_cover(&self) -> Result<SeifertSymbol> {
        if self.base.orientable {
            return Err(Error::OrientableBase);
        }
        let base = BaseSurface {
            genus: self.base.genus - 1,
            orientable: true,
            boundary_components: 2 * self.base.boundary_components,
        };
        let fibres = self.fibres.iter().flat_map(|&f| [f, f]).collect();
        let b = if self.is_closed() { 2 * self.b } else { 0 };
        Ok(SeifertSymbol { b, base, fibres })
    }

    pub fn base_orbifold(&self) -> OrbifoldData {
        OrbifoldData::new(self.base, self.fibres.iter().map(|f| f.alpha as u32).collect())
    }
}

impl fmt::Display for SeifertSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&grammar::render_symbol(self))
    }
}

impl FromStr for SeifertSymbol {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        grammar::parse_symbol(s)
    }
}

impl fmt::Display for OrbifoldData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&grammar::render_orbifold(self))
    }
}

impl FromStr for OrbifoldData {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        grammar::parse_orbifold(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::euler_number;
    use crate::rational::Rational;

    fn sym(s: &str) -> SeifertSymbol {
        s.parse().unwrap()
    }

    #[test]
    fn normalize_moves_integer_parts_into_b() {
        let s = SeifertSymbol::new(0, BaseSurface::orientable(0), vec![FibrePair::new(3, 4)]);
        let n = s.normalize();
        assert_eq!(n, SeifertSymbol::new(1, BaseSurface::orientable(0), vec![FibrePair::new(3, 1)]));
        assert_eq!(euler_number(&s).unwrap(), Rational::new(-4, 3));
        assert_eq!(euler_number(&n).unwrap(), Rational::new(-4, 3));

        let s = SeifertSymbol::new(0, BaseSurface::orientable(0), vec![FibrePair::new(3, -1)]);
        let n = s.normalize();
        assert_eq!(n, SeifertSymbol::new(-1, BaseSurface::orientable(0), vec![FibrePair::new(3, 2)]));
        assert_eq!(euler_number(&n).unwrap(), Rational::new(1, 3));

        let s = sym("SFS[-1; o 0; (2,1)(3,1)(6,1)]");
        assert_eq!(s.normalize(), s);
    }

    #[test]
    fn degenerate_pairs_fold_into_b() {
        let s = SeifertSymbol::new(0, BaseSurface::orientable(1), vec![FibrePair::new(1, 3), FibrePair::new(2, 1)]);
        let n = s.normalize();
        assert_eq!(n, SeifertSymbol::new(3, BaseSurface::orientable(1), vec![FibrePair::new(2, 1)]));
    }

    #[test]
    fn bounded_normalize_keeps_b_zero() {
        let s = SeifertSymbol::new(0, BaseSurface::orientable(0).with_boundary(1), vec![FibrePair::new(3, 7)]);
        assert_eq!(s.normalize().fibres, vec![FibrePair::new(3, 1)]);
        assert_eq!(s.normalize().b, 0);
    }

    #[test]
    fn flip_examples() {
        let s = sym("SFS[0; o 0; (2,1)(3,1)(6,1)]");
        let f = s.flip_orientation();
        assert_eq!(f, sym("SFS[-3; o 0; (2,1)(3,2)(6,5)]"));
        assert_eq!(euler_number(&s).unwrap(), Rational::integer(-1));
        assert_eq!(euler_number(&f).unwrap(), Rational::integer(1));
        assert_eq!(sym("SFS[-2; o 1;]").flip_orientation(), sym("SFS[2; o 1;]"));
        assert_eq!(f.flip_orientation(), s);
    }

    #[test]
    fn bounded_flip_only_reflects_betas() {
        let s = sym("SFS[0; o 0; bd 1; (2,1)(3,1)]");
        assert_eq!(s.flip_orientation(), sym("SFS[0; o 0; bd 1; (2,1)(3,2)]"));
    }

    #[test]
    fn canonical_form_picks_lexicographic_minimum() {
        let s = sym("SFS[0; o 0; (3,1)(2,1)(6,1)]");
        let c = s.canonical_form();
        assert_eq!(c, sym("SFS[-3; o 0; (2,1)(3,2)(6,5)]"));
        assert_eq!(c.canonical_form(), c);
        assert_eq!(s.flip_orientation().canonical_form(), c);
    }

    #[test]
    fn double_cover_examples() {
        let s = sym("SFS[1; n 1; (3,1)]");
        let d = s.orientation_double_cover().unwrap();
        assert_eq!(d, sym("SFS[2; o 0; (3,1)(3,1)]"));
        assert_eq!(euler_number(&d).unwrap(), euler_number(&s).unwrap() * Rational::integer(2));

        let k = sym("SFS[0; n 2;]").orientation_double_cover().unwrap();
        assert_eq!(k, sym("SFS[0; o 1;]"));

        let s = sym("SFS[-1; n 1; (2,1)(3,2)]");
        let d = s.orientation_double_cover().unwrap();
        assert_eq!(d.fibres, vec![FibrePair::new(2, 1), FibrePair::new(2, 1), FibrePair::new(3, 2), FibrePair::new(3, 2)]);
        assert_eq!(d.base, BaseSurface::orientable(0));

        assert_eq!(sym("SFS[0; o 1;]").orientation_double_cover(), Err(Error::OrientableBase));
    }

    #[test]
    fn base_orbifold_projection() {
        let o = sym("SFS[-1; o 0; (2,1)(3,1)(6,1)]").base_orbifold();
        assert_eq!(o, OrbifoldData::new(BaseSurface::orientable(0), vec![2, 3, 6]));
        assert_eq!(sym("SFS[-2; o 1;]").base_orbifold().cone_orders, Vec::<u32>::new());
        let o = sym("SFS[0; o 0; bd 2; (5,2)]").base_orbifold();
        assert_eq!(o.surface.boundary_components, 2);
        assert_eq!(o.cone_orders, vec![5]);
    }

    #[test]
    fn rotation_invariants_convert_by_inverse() {
        // rotation 2π·2/5: β·2 ≡ 1 mod 5 gives β = 3
        assert_eq!(FibrePair::from_rotation(5, 2).unwrap(), FibrePair::new(5, 3));
        assert!(FibrePair::from_rotation(4, 2).is_err());
    }
}
