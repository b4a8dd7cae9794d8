//! Classifying invariants of Seifert symbols: Euler number, orbifold Euler
//! characteristic, geometry, fundamental-group presentation, first homology.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::presentation::{commutator, power, Letter, Presentation, Word};
use crate::rational::Rational;
use crate::snf::{smith_normal_form, AbelianGroup, IntMatrix};
use crate::symbol::{OrbifoldData, SeifertSymbol};

/// `e = −(b + Σ β_i/α_i)`, defined for closed symbols only.
pub fn euler_number(s: &SeifertSymbol) -> Result<Rational> {
    if !s.is_closed() {
        return Err(Error::BoundedSymbol);
    }
    let fibres: Rational = s.fibres.iter().map(|f| Rational::new(f.beta as i128, f.alpha as i128)).sum();
    Ok(-(Rational::from(s.b) + fibres))
}

/// `χ(Σ) − Σ (1 − 1/p_i)`, with each boundary circle lowering `χ(Σ)` by one.
pub fn orbifold_euler_characteristic(o: &OrbifoldData) -> Rational {
    let cones: Rational = o.cone_orders.iter().map(|&p| Rational::new(p as i128 - 1, p as i128)).sum();
    Rational::from(o.surface.euler_characteristic()) - cones
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Geometry {
    S3,
    S2xR,
    E3,
    Nil,
    H2xR,
    Sl2r,
    /// Bounded symbols: sign of the base orbifold characteristic only.
    PositiveBase,
    ZeroBase,
    HyperbolicBase,
}

impl Geometry {
    pub fn tag(&self) -> &'static str {
        match self {
            Geometry::S3 => "S3",
            Geometry::S2xR => "S2xR",
            Geometry::E3 => "E3",
            Geometry::Nil => "Nil",
            Geometry::H2xR => "H2xR",
            Geometry::Sl2r => "SL2R~",
            Geometry::PositiveBase => "PositiveBase",
            Geometry::ZeroBase => "ZeroBase",
            Geometry::HyperbolicBase => "HyperbolicBase",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Geometry> {
        const ALL: [Geometry; 9] = [
            Geometry::S3,
            Geometry::S2xR,
            Geometry::E3,
            Geometry::Nil,
            Geometry::H2xR,
            Geometry::Sl2r,
            Geometry::PositiveBase,
            Geometry::ZeroBase,
            Geometry::HyperbolicBase,
        ];
        ALL.into_iter().find(|g| g.tag() == tag)
    }
}

impl fmt::Display for Geometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl Serialize for Geometry {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.tag())
    }
}

/// Geometry from the sign of `χ^orb` and whether `e` vanishes.
pub fn geometry(s: &SeifertSymbol) -> Geometry {
    let chi = orbifold_euler_characteristic(&s.base_orbifold()).signum();
    let Ok(e) = euler_number(s) else {
        return match chi {
            Ordering::Greater => Geometry::PositiveBase,
            Ordering::Equal => Geometry::ZeroBase,
            Ordering::Less => Geometry::HyperbolicBase,
        };
    };
    match (chi, e.is_zero()) {
        (Ordering::Greater, true) => Geometry::S2xR,
        (Ordering::Greater, false) => Geometry::S3,
        (Ordering::Equal, true) => Geometry::E3,
        (Ordering::Equal, false) => Geometry::Nil,
        (Ordering::Less, true) => Geometry::H2xR,
        (Ordering::Less, false) => Geometry::Sl2r,
    }
}

/// Generator layout shared by the 3-manifold and orbifold presentations.
struct Layout {
    names: Vec<String>,
    cones: Vec<Letter>,
    /// `(u_j, v_j)` for orientable bases, `v_j` alone otherwise.
    handles: Vec<(Letter, Option<Letter>)>,
}

impl Layout {
    fn new(r: usize, genus: u32, orientable: bool, boundary: u32) -> Self {
        let mut names = Vec::new();
        let mut push = |name: String| {
            names.push(name);
            names.len() as Letter
        };
        let cones = (1..=r).map(|i| push(format!("a{i}"))).collect();
        let handles = (1..=genus)
            .map(|j| if orientable { (push(format!("u{j}")), Some(push(format!("v{j}")))) } else { (push(format!("v{j}")), None) })
            .collect();
        for k in 1..boundary {
            push(format!("d{k}"));
        }
        Layout { names, cones, handles }
    }

    /// `a_1 ⋯ a_r [u_1, v_1] ⋯` or `a_1 ⋯ a_r v_1² ⋯`.
    fn surface_word(&self) -> Word {
        let mut w: Word = self.cones.clone();
        for &(u, v) in &self.handles {
            match v {
                Some(v) => w.extend(commutator(&[u], &[v])),
                None => w.extend([u, u]),
            }
        }
        w
    }
}

/// Fundamental-group presentation with the regular fibre `h` distinguished.
///
/// Orientable base: `[x, h]` for every other generator, `a_i^{α_i} h^{β_i}`
/// and `a_1 ⋯ a_r [u_1,v_1] ⋯ [u_g,v_g] h^{−b}`. Non-orientable base: `h` is
/// fixed by each `a_i` and inverted by each `v_j`, with surface relation
/// `a_1 ⋯ a_r v_1² ⋯ v_g² h^{−b}`. Bounded bases drop the surface relation and
/// gain one free generator per boundary circle beyond the first.
pub fn presentation(s: &SeifertSymbol) -> Presentation {
    let base = &s.base;
    let mut layout = Layout::new(s.fibres.len(), base.genus, base.orientable, base.boundary_components);
    layout.names.push("h".to_string());
    let h = layout.names.len() as Letter;
    let mut relators = Vec::new();
    let twisted: Vec<Letter> = layout.handles.iter().map(|&(v, _)| v).collect();
    for x in 1..h {
        let inverted = !base.orientable && twisted.contains(&x);
        relators.push(if base.orientable {
            commutator(&[x], &[h])
        } else if inverted {
            vec![-x, h, x, h]
        } else {
            vec![-x, h, x, -h]
        });
    }
    for (&a, f) in layout.cones.iter().zip(&s.fibres) {
        let mut w = power(&[a], f.alpha);
        w.extend(power(&[h], f.beta));
        relators.push(w);
    }
    if s.is_closed() {
        let mut w = layout.surface_word();
        w.extend(power(&[h], -s.b));
        relators.push(w);
    }
    Presentation { generators: layout.names, relators, distinguished: Some("h".to_string()) }
}

/// Orbifold fundamental group of a 2-orbifold.
pub fn orbifold_presentation(o: &OrbifoldData) -> Presentation {
    let surface = &o.surface;
    let layout = Layout::new(o.cone_orders.len(), surface.genus, surface.orientable, surface.boundary_components);
    let mut relators: Vec<Word> =
        layout.cones.iter().zip(&o.cone_orders).map(|(&a, &p)| power(&[a], p as i64)).collect();
    if surface.is_closed() {
        relators.push(layout.surface_word());
    }
    Presentation::new(layout.names, relators)
}

/// Abelianization, as the cokernel of the relator exponent-sum matrix.
pub fn first_homology(p: &Presentation) -> AbelianGroup {
    let m = IntMatrix::from_rows(&p.exponent_matrix(), p.num_generators());
    smith_normal_form(&m).cokernel()
}

/// Invariants of a symbol as reported by the command-line tool.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub symbol: String,
    /// Absent for bounded symbols.
    pub euler_number: Option<Rational>,
    pub chi_orb: Rational,
    pub geometry: Geometry,
    pub h1: AbelianGroup,
    pub base_orbifold: String,
}

pub fn invariant_report(s: &SeifertSymbol) -> InvariantReport {
    let n = s.normalize();
    InvariantReport {
        symbol: n.to_string(),
        euler_number: euler_number(&n).ok(),
        chi_orb: orbifold_euler_characteristic(&n.base_orbifold()),
        geometry: geometry(&n),
        h1: first_homology(&presentation(&n)),
        base_orbifold: n.base_orbifold().to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbol::BaseSurface;

    fn sym(s: &str) -> SeifertSymbol {
        s.parse().unwrap()
    }

    fn orb(s: &str) -> OrbifoldData {
        s.parse().unwrap()
    }

    #[test]
    fn euler_numbers() {
        assert_eq!(euler_number(&sym("SFS[-1; o 0; (2,1)(3,1)(6,1)]")).unwrap(), Rational::ZERO);
        assert_eq!(euler_number(&sym("SFS[-2; o 1;]")).unwrap(), Rational::integer(2));
        assert_eq!(euler_number(&sym("SFS[-1; o 0; (5,1)(5,1)(5,3)]")).unwrap(), Rational::ZERO);
        assert_eq!(euler_number(&sym("SFS[0; o 0; bd 1; (3,1)]")), Err(Error::BoundedSymbol));
    }

    #[test]
    fn orbifold_characteristics() {
        assert_eq!(orbifold_euler_characteristic(&orb("ORB[o 0; 2,3,6]")), Rational::ZERO);
        assert_eq!(orbifold_euler_characteristic(&orb("ORB[o 0; 5,5,5]")), Rational::new(-2, 5));
        assert_eq!(orbifold_euler_characteristic(&orb("ORB[n 1; 3]")), Rational::new(1, 3));
        assert_eq!(orbifold_euler_characteristic(&orb("ORB[o 0; 3,3]")), Rational::new(2, 3));
        assert_eq!(orbifold_euler_characteristic(&orb("ORB[o 0; bd 1; 2,3]")), Rational::new(-1, 6));
    }

    #[test]
    fn geometry_examples() {
        assert_eq!(geometry(&sym("SFS[-1; o 0; (2,1)(3,1)(6,1)]")), Geometry::E3);
        assert_eq!(geometry(&sym("SFS[-1; o 0; (5,1)(5,1)(5,3)]")), Geometry::H2xR);
        assert_eq!(geometry(&sym("SFS[-1; o 0; (2,1)(3,1)(5,1)]")), Geometry::S3);
        assert_eq!(geometry(&sym("SFS[0; o 0; bd 1; (2,1)(3,1)]")), Geometry::HyperbolicBase);
        assert_eq!(geometry(&sym("SFS[0; o 0; bd 1; (2,1)]")), Geometry::PositiveBase);
        assert_eq!(geometry(&sym("SFS[0; o 1; bd 1;]")), Geometry::HyperbolicBase);
        assert_eq!(geometry(&sym("SFS[0; o 0; bd 2;]")), Geometry::ZeroBase);
    }

    #[test]
    fn geometry_tags_round_trip() {
        for tag in ["S3", "S2xR", "E3", "Nil", "H2xR", "SL2R~", "ZeroBase"] {
            assert_eq!(Geometry::from_tag(tag).unwrap().tag(), tag);
        }
        assert_eq!(serde_json::to_string(&Geometry::Sl2r).unwrap(), "\"SL2R~\"");
    }

    #[test]
    fn torus_base_presentation() {
        let p = presentation(&sym("SFS[-2; o 1;]"));
        let expected: Presentation = "<u1, v1, h | [u1,h], [v1,h], [u1,v1] h^2>".parse().unwrap();
        assert_eq!(p.generators, expected.generators);
        assert_eq!(p.relators, expected.relators);
        assert_eq!(p.distinguished.as_deref(), Some("h"));
    }

    #[test]
    fn sphere_base_presentation() {
        let p = presentation(&sym("SFS[-1; o 0; (2,1)(3,1)(6,1)]"));
        let expected: Presentation =
            "<a1, a2, a3, h | [a1,h], [a2,h], [a3,h], a1^2 h, a2^3 h, a3^6 h, a1 a2 a3 h>".parse().unwrap();
        assert_eq!(p.generators, expected.generators);
        assert_eq!(p.relators, expected.relators);
    }

    #[test]
    fn bounded_presentation_has_no_surface_relation() {
        let p = presentation(&sym("SFS[0; o 0; bd 1; (3,1)]"));
        let expected: Presentation = "<a1, h | [a1,h], a1^3 h>".parse().unwrap();
        assert_eq!(p.generators, expected.generators);
        assert_eq!(p.relators, expected.relators);

        let p = presentation(&sym("SFS[0; o 1; bd 3; (2,1)]"));
        assert_eq!(p.generators, vec!["a1", "u1", "v1", "d1", "d2", "h"]);
        assert_eq!(first_homology(&p), AbelianGroup::free(5));
    }

    #[test]
    fn non_orientable_presentation() {
        let p = presentation(&sym("SFS[1; n 1; (3,1)]"));
        let expected: Presentation = "<a1, v1, h | a1^-1 h a1 h^-1, v1^-1 h v1 h, a1^3 h, a1 v1^2 h^-1>".parse().unwrap();
        assert_eq!(p.generators, expected.generators);
        assert_eq!(p.relators, expected.relators);
    }

    #[test]
    fn homology_examples() {
        let h = first_homology(&presentation(&sym("SFS[-2; o 1;]")));
        assert_eq!(h, AbelianGroup { free_rank: 2, torsion: vec![2] });
        assert_eq!(first_homology(&"<a | >".parse().unwrap()), AbelianGroup::free(1));
        let h = first_homology(&presentation(&sym("SFS[-1; o 0; (2,1)(3,1)(6,1)]")));
        assert_eq!(h, AbelianGroup::free(1));
    }

    #[test]
    fn torus_base_homology_formula() {
        for b in -6i64..=6 {
            let s = SeifertSymbol::new(b, BaseSurface::orientable(1), vec![]);
            let torsion = if b.abs() > 1 { vec![b.unsigned_abs()] } else { vec![] };
            let free_rank = if b == 0 { 3 } else { 2 };
            assert_eq!(first_homology(&presentation(&s)), AbelianGroup { free_rank, torsion });
        }
    }

    #[test]
    fn orbifold_groups() {
        let h = first_homology(&orbifold_presentation(&orb("ORB[o 1;]")));
        assert_eq!(h, AbelianGroup::free(2));
        let h = first_homology(&orbifold_presentation(&orb("ORB[n 2;]")));
        assert_eq!(h, AbelianGroup { free_rank: 1, torsion: vec![2] });
        let a = first_homology(&orbifold_presentation(&orb("ORB[o 0; 2,4,4]")));
        let b = first_homology(&orbifold_presentation(&orb("ORB[n 1; 2,2]")));
        assert_eq!(a, b);
    }

    #[test]
    fn report_serializes_stable_keys() {
        let r = invariant_report(&sym("SFS[-2; o 1;]"));
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["euler_number"], serde_json::json!({"num": 2, "den": 1}));
        assert_eq!(v["chi_orb"], serde_json::json!({"num": 0, "den": 1}));
        assert_eq!(v["geometry"], "Nil");
        assert_eq!(v["h1"], serde_json::json!({"rank": 2, "torsion": [2]}));
    }
}
