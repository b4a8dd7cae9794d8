//! Finite permutation groups used as hom-counting targets.
//!
//! Catalogue files hold one group per line:
//!
//! ```text
//! # comment
//! S3; 3; (1 2), (1 2 3)
//! ```
//!
//! Permutations are written in disjoint-cycle notation on `1..=degree`;
//! `()` is the identity. Every group is expanded to its full element list on
//! load.

use std::collections::{BTreeSet, HashMap};
use std::fmt::{self, Write as _};

use sha2::{Digest, Sha256};

use crate::error::CatalogueError;

/// Default bound on the order of a group expanded on load.
pub const DEFAULT_ORDER_CAP: usize = 10080;

/// Groups up to this order keep a full multiplication table.
const TABLE_LIMIT: usize = 1024;

/// The shipped catalogue: one group of each isomorphism type of order at most 24.
pub const DEFAULT_CATALOGUE: &str = include_str!("../../data/groups_le24.txt");

/// A permutation of `0..degree`, stored as its image list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u16>);

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm((0..degree as u16).collect())
    }

    pub fn from_images(images: Vec<u16>) -> Option<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            let slot = seen.get_mut(i as usize)?;
            if *slot {
                return None;
            }
            *slot = true;
        }
        Some(Perm(images))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn image(&self, point: usize) -> usize {
        self.0[point] as usize
    }

    /// `self` then `other` (right action).
    pub fn then(&self, other: &Perm) -> Perm {
        Perm(self.0.iter().map(|&i| other.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u16; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j as usize] = i as u16;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    /// Parses disjoint-cycle notation with 1-based points.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Perm, String> {
        let mut images: Vec<u16> = (0..degree as u16).collect();
        let mut used = vec![false; degree];
        let mut rest = text.trim();
        if rest.is_empty() {
            return Err("empty permutation".into());
        }
        while !rest.is_empty() {
            let Some(body) = rest.strip_prefix('(') else {
                return Err(format!("expected '(' in {text:?}"));
            };
            let close = body.find(')').ok_or_else(|| format!("unclosed cycle in {text:?}"))?;
            let mut cycle = Vec::new();
            for tok in body[..close].split_whitespace() {
                let p: usize = tok.parse().map_err(|_| format!("bad point {tok:?}"))?;
                if p == 0 {
                    return Err("points are numbered from 1".into());
                }
                if p > degree {
                    return Err(format!("point:{p}"));
                }
                if std::mem::replace(&mut used[p - 1], true) {
                    return Err(format!("point {p} repeated"));
                }
                cycle.push(p - 1);
            }
            for (k, &p) in cycle.iter().enumerate() {
                images[p] = cycle[(k + 1) % cycle.len()] as u16;
            }
            rest = body[close + 1..].trim_start();
        }
        Ok(Perm(images))
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.0.len()];
        let mut any = false;
        for start in 0..self.0.len() {
            if seen[start] || self.0[start] as usize == start {
                continue;
            }
            any = true;
            f.write_char('(')?;
            let mut p = start;
            let mut first = true;
            while !seen[p] {
                seen[p] = true;
                if !first {
                    f.write_char(' ')?;
                }
                write!(f, "{}", p + 1)?;
                first = false;
                p = self.0[p] as usize;
            }
            f.write_char(')')?;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

/// A finite permutation group with its elements enumerated.
///
/// Element 0 is the identity; elements are addressed by index.
#[derive(Debug, Clone)]
pub struct FiniteGroupTable {
    pub name: String,
    pub degree: usize,
    pub generators: Vec<Perm>,
    elements: Vec<Perm>,
    index: HashMap<Perm, u32>,
    inverse: Vec<u32>,
    table: Option<Vec<u32>>,
}

impl FiniteGroupTable {
    /// Expands the group generated by `generators`, failing once more than
    /// `cap` elements have been found.
    pub fn new(name: &str, degree: usize, generators: Vec<Perm>, cap: usize) -> Result<Self, CatalogueError> {
        let too_large = || CatalogueError::TooLarge { name: name.to_string(), cap };
        let id = Perm::identity(degree);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id, 0u32)]);
        let mut frontier = 0;
        while frontier < elements.len() {
            for g in &generators {
                let y = elements[frontier].then(g);
                if !index.contains_key(&y) {
                    if elements.len() >= cap {
                        return Err(too_large());
                    }
                    index.insert(y.clone(), elements.len() as u32);
                    elements.push(y);
                }
            }
            frontier += 1;
        }
        let inverse = elements.iter().map(|e| index[&e.inverse()]).collect();
        let n = elements.len();
        let table = (n <= TABLE_LIMIT).then(|| {
            let mut t = Vec::with_capacity(n * n);
            for a in &elements {
                for b in &elements {
                    t.push(index[&a.then(b)]);
                }
            }
            t
        });
        Ok(FiniteGroupTable { name: name.to_string(), degree, generators, elements, index, inverse, table })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn element(&self, i: u32) -> &Perm {
        &self.elements[i as usize]
    }

    pub fn index_of(&self, p: &Perm) -> Option<u32> {
        self.index.get(p).copied()
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        match &self.table {
            Some(t) => t[a as usize * self.elements.len() + b as usize],
            None => self.index[&self.elements[a as usize].then(&self.elements[b as usize])],
        }
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.inverse[a as usize]
    }

    /// Size of the subgroup generated by the given elements.
    pub fn subgroup_order(&self, gens: &[u32]) -> usize {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut stack = vec![0u32];
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().all(|a| self.generators.iter().all(|b| a.then(b) == b.then(a)))
    }

    /// Catalogue line for this group.
    pub fn to_line(&self) -> String {
        let gens: Vec<String> = self.generators.iter().map(Perm::to_string).collect();
        let gens = if gens.is_empty() { "()".to_string() } else { gens.join(", ") };
        format!("{}; {}; {}", self.name, self.degree, gens)
    }
}

/// Splits a generator list at commas that sit outside cycles.
fn split_perms(text: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&text[start..]);
    parts.into_iter().map(str::trim).filter(|s| !s.is_empty()).collect()
}

/// Parses and expands a catalogue with the default order cap.
pub fn load_catalogue(source: &str) -> Result<Vec<FiniteGroupTable>, CatalogueError> {
    load_catalogue_with_cap(source, DEFAULT_ORDER_CAP)
}

pub fn load_catalogue_with_cap(source: &str, cap: usize) -> Result<Vec<FiniteGroupTable>, CatalogueError> {
    let mut groups = Vec::new();
    let mut names = BTreeSet::new();
    for (lineno, raw) in source.lines().enumerate() {
        let line = lineno + 1;
        let text = raw.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        let malformed = |msg: String| CatalogueError::Malformed { line, msg };
        let fields: Vec<&str> = text.splitn(3, ';').map(str::trim).collect();
        if fields.len() != 3 {
            return Err(malformed("expected \"name; degree; generators\"".into()));
        }
        let name = fields[0];
        if name.is_empty() {
            return Err(malformed("empty group name".into()));
        }
        let degree: usize = fields[1]
            .parse()
            .ok()
            .filter(|&d| d > 0 && d <= u16::MAX as usize)
            .ok_or_else(|| malformed(format!("bad degree {:?}", fields[1])))?;
        let mut generators = Vec::new();
        for p in split_perms(fields[2]) {
            match Perm::parse_cycles(p, degree) {
                Ok(perm) => generators.push(perm),
                Err(msg) => {
                    if let Some(point) = msg.strip_prefix("point:") {
                        let point = point.parse().unwrap_or(0);
                        return Err(CatalogueError::PointExceedsDegree { line, point, degree });
                    }
                    return Err(malformed(msg));
                }
            }
        }
        if !names.insert(name.to_string()) {
            return Err(CatalogueError::DuplicateName { line, name: name.to_string() });
        }
        groups.push(FiniteGroupTable::new(name, degree, generators, cap)?);
    }
    Ok(groups)
}

/// Stable identifier of a catalogue: truncated SHA-256 of its canonical lines.
pub fn catalogue_id(groups: &[FiniteGroupTable]) -> String {
    let mut hasher = Sha256::new();
    for g in groups {
        hasher.update(g.to_line().as_bytes());
        hasher.update(b"\n");
    }
    let digest = hasher.finalize();
    digest[..8].iter().map(|b| format!("{b:02x}")).collect()
}

/// Catalogue groups of order at most `max_order`.
pub fn default_catalogue(max_order: usize) -> Vec<FiniteGroupTable> {
    load_catalogue(DEFAULT_CATALOGUE)
        .expect("shipped catalogue is valid")
        .into_iter()
        .filter(|g| g.order() <= max_order)
        .collect()
}
