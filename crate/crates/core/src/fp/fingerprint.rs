//! Finite-quotient fingerprints: hom counts into a catalogue of finite groups
//! plus the spectrum of low-index subgroups.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::fp::catalogue::{catalogue_id, FiniteGroupTable};
use crate::fp::homs::count_homomorphisms;
use crate::fp::low_index::low_index_subgroups;
use crate::fp::schreier::raw_subgroup_presentation;
use crate::invariants::first_homology;
use crate::presentation::Presentation;
use crate::snf::AbelianGroup;

/// One conjugacy class of finite-index subgroups.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CoverRecord {
    pub index: usize,
    pub is_normal: bool,
    pub h1: AbelianGroup,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FingerprintDepth {
    pub max_index: usize,
    pub catalogue_id: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuotientFingerprint {
    pub hom_counts: BTreeMap<String, u64>,
    /// Sorted, so equal multisets compare equal.
    pub cover_spectrum: Vec<CoverRecord>,
    pub depth: FingerprintDepth,
}

impl QuotientFingerprint {
    /// Spectrum records of the given index.
    pub fn covers_of_index(&self, index: usize) -> Vec<&CoverRecord> {
        self.cover_spectrum.iter().filter(|r| r.index == index).collect()
    }

    /// Human-readable list of the entries in which two fingerprints differ.
    pub fn differences(&self, other: &QuotientFingerprint) -> Vec<String> {
        let mut out = Vec::new();
        if self.depth != other.depth {
            out.push(format!(
                "depth: (index {}, catalogue {}) vs (index {}, catalogue {})",
                self.depth.max_index, self.depth.catalogue_id, other.depth.max_index, other.depth.catalogue_id
            ));
        }
        let names: std::collections::BTreeSet<&String> =
            self.hom_counts.keys().chain(other.hom_counts.keys()).collect();
        for name in names {
            let (a, b) = (self.hom_counts.get(name), other.hom_counts.get(name));
            if a != b {
                let show = |x: Option<&u64>| x.map_or("-".to_string(), u64::to_string);
                out.push(format!("hom count into {name}: {} vs {}", show(a), show(b)));
            }
        }
        let max = self.depth.max_index.max(other.depth.max_index);
        for index in 1..=max {
            let (a, b) = (self.covers_of_index(index), other.covers_of_index(index));
            if a != b {
                let show = |rs: &[&CoverRecord]| {
                    let parts: Vec<String> = rs
                        .iter()
                        .map(|r| format!("{}{}", r.h1, if r.is_normal { " (normal)" } else { "" }))
                        .collect();
                    format!("[{}]", parts.join("; "))
                };
                out.push(format!("index-{index} covers: {} vs {}", show(&a), show(&b)));
            }
        }
        out
    }
}

/// Hom counts for every catalogue group and the first homology of every
/// class of subgroups of index at most `max_index`.
pub fn fingerprint(p: &Presentation, max_index: usize, catalogue: &[FiniteGroupTable]) -> Result<QuotientFingerprint> {
    let hom_counts = catalogue
        .par_iter()
        .map(|f| (f.name.clone(), count_homomorphisms(p, f)))
        .collect();
    let tables = low_index_subgroups(p, max_index)?;
    let mut cover_spectrum: Vec<CoverRecord> = tables
        .par_iter()
        .map(|t| CoverRecord {
            index: t.index,
            is_normal: t.is_normal,
            h1: first_homology(&raw_subgroup_presentation(p, t)),
        })
        .collect();
    cover_spectrum.sort();
    Ok(QuotientFingerprint {
        hom_counts,
        cover_spectrum,
        depth: FingerprintDepth { max_index, catalogue_id: catalogue_id(catalogue) },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fp::catalogue::load_catalogue;

    fn pres(s: &str) -> Presentation {
        s.parse().unwrap()
    }

    #[test]
    fn integers_at_index_two() {
        let c2 = load_catalogue("C2; 2; (1 2)").unwrap();
        let f = fingerprint(&pres("<a | >"), 2, &c2).unwrap();
        assert_eq!(f.hom_counts, BTreeMap::from([("C2".to_string(), 2)]));
        let z = AbelianGroup::free(1);
        assert_eq!(
            f.cover_spectrum,
            vec![
                CoverRecord { index: 1, is_normal: true, h1: z.clone() },
                CoverRecord { index: 2, is_normal: true, h1: z },
            ]
        );
    }

    #[test]
    fn tietze_equivalent_presentations_agree() {
        let cat = load_catalogue("C2; 2; (1 2)\nS3; 3; (1 2), (1 2 3)\nC4; 4; (1 2 3 4)").unwrap();
        let p = pres("<a, b | [a,b]>");
        let q = pres("<x, y, z | x y x^-1 y^-1, z y^-1>");
        let (fp, fq) = (fingerprint(&p, 3, &cat).unwrap(), fingerprint(&q, 3, &cat).unwrap());
        assert_eq!(fp, fq);
        assert!(fp.differences(&fq).is_empty());
    }

    #[test]
    fn renaming_generators_changes_nothing() {
        let cat = load_catalogue("S3; 3; (1 2), (1 2 3)").unwrap();
        let p = pres("<a, b | a^2, b^3>");
        let q = pres("<s, t | s^2, t^3>");
        assert_eq!(fingerprint(&p, 4, &cat).unwrap(), fingerprint(&q, 4, &cat).unwrap());
    }

    #[test]
    fn differences_name_the_entries() {
        let cat = load_catalogue("C2; 2; (1 2)").unwrap();
        let a = fingerprint(&pres("<a | a^2>"), 2, &cat).unwrap();
        let b = fingerprint(&pres("<a | a^3>"), 2, &cat).unwrap();
        let d = a.differences(&b);
        assert!(d.iter().any(|s| s.starts_with("hom count into C2")));
        assert!(d.iter().any(|s| s.starts_with("index-1 covers")));
    }
}
