//! Quivers, paths, and finite-dimensional monomial bound quiver algebras kQ/I.
//!
//! Convention: composition reads right to left, so a relation written
//! "a2 a1" is the path that applies a1 first and a2 second. Internally a
//! [`Path`] stores its arrows in application order (first-applied first);
//! only parsing and display deal with the written right-to-left order.
//!
//! The basis of kQ/I is the set of paths containing no relation as a
//! contiguous subpath, enumerated breadth-first (by length, then by arrow
//! index), which fixes a canonical basis order used by every module
//! construction downstream.

use crate::linalg::field::Field;
use std::collections::HashMap;
use std::hash::{Hash, Hasher};
use thiserror::Error;

/// Safety cap on basis enumeration when none is given explicitly.
pub const DEFAULT_BASIS_CAP: usize = 100_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("quiver needs at least one vertex")]
    EmptyQuiver,
    #[error("arrow '{name}' has endpoint {vertex} outside 0..{vertex_count}")]
    BadVertex { name: String, vertex: usize, vertex_count: usize },
    #[error("duplicate arrow name '{0}'")]
    DuplicateArrowName(String),
    #[error("invalid relation: {0}")]
    BadRelation(String),
    #[error("path algebra modulo relations is not finite-dimensional within cap {cap}")]
    NotFiniteDimensional { cap: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertex_count: usize,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertex_count: usize, arrows: Vec<Arrow>) -> Result<Quiver, AlgebraError> {
        if vertex_count == 0 {
            return Err(AlgebraError::EmptyQuiver);
        }
        let mut seen = std::collections::HashSet::new();
        for a in &arrows {
            for v in [a.source, a.target] {
                if v >= vertex_count {
                    return Err(AlgebraError::BadVertex { name: a.name.clone(), vertex: v, vertex_count });
                }
            }
            if !seen.insert(a.name.clone()) {
                return Err(AlgebraError::DuplicateArrowName(a.name.clone()));
            }
        }
        Ok(Quiver { vertex_count, arrows })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn arrow_by_name(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }
}

/// A path in a quiver. `arrows` are indices into `Quiver::arrows` in
/// *application order*: `arrows[0]` acts first. Empty `arrows` is the
/// trivial path e_start.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    start: usize,
    arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Path {
        Path { start: v, arrows: vec![] }
    }

    /// Build a path from arrows in application order, checking composability.
    pub fn from_arrows(quiver: &Quiver, arrows: Vec<usize>) -> Result<Path, AlgebraError> {
        if arrows.is_empty() {
            return Err(AlgebraError::BadRelation("a non-trivial path needs at least one arrow".into()));
        }
        let start = quiver.arrows()[arrows[0]].source;
        let mut at = start;
        for &i in &arrows {
            let a = quiver
                .arrows()
                .get(i)
                .ok_or_else(|| AlgebraError::BadRelation(format!("arrow index {i} out of range")))?;
            if a.source != at {
                return Err(AlgebraError::BadRelation(format!(
                    "arrow '{}' starts at {} but the path has reached {}",
                    a.name,
                    a.source + 1,
                    at + 1
                )));
            }
            at = a.target;
        }
        Ok(Path { start, arrows })
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn end(&self, quiver: &Quiver) -> usize {
        self.arrows.last().map_or(self.start, |&i| quiver.arrows()[i].target)
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn arrow_indices(&self) -> &[usize] {
        &self.arrows
    }

    /// The same walk in the opposite quiver (arrows reversed, same indices).
    pub fn reversed(&self, quiver: &Quiver) -> Path {
        Path { start: self.end(quiver), arrows: self.arrows.iter().rev().copied().collect() }
    }
}

/// Result of composing two paths in a monomial algebra: either a basis path
/// or zero. Non-composable endpoints also give zero (e_w * p = 0 for w
/// different from the end of p).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PathProduct {
    Path(Path),
    Zero,
}

/// A monomial bound quiver algebra kQ/I with I generated by paths of
/// length >= 2, finite-dimensional with an explicit path basis.
#[derive(Debug, Clone)]
pub struct MonomialAlgebra {
    quiver: Quiver,
    relations: Vec<Path>,
    field: Field,
    basis: Vec<Path>,
    index: HashMap<Path, usize>,
    /// left_mul[a][i] = basis index of (arrow a) . basis[i], if nonzero.
    left_mul: Vec<Vec<Option<usize>>>,
    paths_starting: Vec<Vec<usize>>,
    paths_ending: Vec<Vec<usize>>,
}

impl PartialEq for MonomialAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.quiver == other.quiver && self.relations == other.relations && self.field == other.field
    }
}

impl Eq for MonomialAlgebra {}

impl Hash for MonomialAlgebra {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.quiver.hash(state);
        self.relations.hash(state);
        self.field.hash(state);
    }
}

impl MonomialAlgebra {
    pub fn new(quiver: Quiver, relations: Vec<Path>, field: Field) -> Result<MonomialAlgebra, AlgebraError> {
        MonomialAlgebra::with_cap(quiver, relations, field, DEFAULT_BASIS_CAP)
    }

    pub fn with_cap(quiver: Quiver, relations: Vec<Path>, field: Field, cap: usize) -> Result<MonomialAlgebra, AlgebraError> {
        for r in &relations {
            if r.len() < 2 {
                return Err(AlgebraError::BadRelation(
                    "monomial relations must be paths of length >= 2 (admissibility)".into(),
                ));
            }
            // re-validate composability against this quiver
            Path::from_arrows(&quiver, r.arrow_indices().to_vec())?;
        }
        let basis = enumerate_basis(&quiver, &relations, cap)?;
        let index: HashMap<Path, usize> = basis.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let mut alg = MonomialAlgebra {
            quiver,
            relations,
            field,
            basis,
            index,
            left_mul: vec![],
            paths_starting: vec![],
            paths_ending: vec![],
        };
        alg.build_tables();
        Ok(alg)
    }

    fn build_tables(&mut self) {
        let n = self.quiver.vertex_count();
        self.paths_starting = vec![vec![]; n];
        self.paths_ending = vec![vec![]; n];
        for (i, p) in self.basis.iter().enumerate() {
            self.paths_starting[p.start()].push(i);
            self.paths_ending[p.end(&self.quiver)].push(i);
        }
        let arrows = self.quiver.arrow_count();
        self.left_mul = vec![vec![None; self.basis.len()]; arrows];
        for a in 0..arrows {
            for (i, p) in self.basis.iter().enumerate() {
                if self.quiver.arrows()[a].source != p.end(&self.quiver) {
                    continue;
                }
                let mut arrows_ext = p.arrow_indices().to_vec();
                arrows_ext.push(a);
                let q = Path { start: p.start(), arrows: arrows_ext };
                self.left_mul[a][i] = self.index.get(&q).copied();
            }
        }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[Path] {
        &self.relations
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn basis_index(&self, p: &Path) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Basis indices of paths with the given start vertex, in basis order.
    pub fn paths_starting_at(&self, v: usize) -> &[usize] {
        &self.paths_starting[v]
    }

    pub fn paths_ending_at(&self, v: usize) -> &[usize] {
        &self.paths_ending[v]
    }

    /// Basis index of (arrow a) . basis[i], or None if the product is zero
    /// or the endpoints do not match.
    pub fn left_mul_arrow(&self, a: usize, i: usize) -> Option<usize> {
        self.left_mul[a][i]
    }

    /// Compose p . q (q applied first). Zero when endpoints mismatch or the
    /// concatenation contains a relation.
    pub fn compose(&self, p: &Path, q: &Path) -> PathProduct {
        if p.start() != q.end(&self.quiver) {
            return PathProduct::Zero;
        }
        let mut arrows = q.arrow_indices().to_vec();
        arrows.extend_from_slice(p.arrow_indices());
        let cand = Path { start: q.start(), arrows };
        if self.contains_relation(&cand) {
            PathProduct::Zero
        } else {
            debug_assert!(self.index.contains_key(&cand), "relation-free path must be in basis");
            PathProduct::Path(cand)
        }
    }

    fn contains_relation(&self, p: &Path) -> bool {
        let w = p.arrow_indices();
        self.relations.iter().any(|r| {
            let rw = r.arrow_indices();
            w.len() >= rw.len() && (0..=w.len() - rw.len()).any(|s| &w[s..s + rw.len()] == rw)
        })
    }

    /// The opposite algebra: every arrow and every relation reversed, names
    /// and indices kept, so `opposite` is an involution on the nose.
    pub fn opposite(&self) -> MonomialAlgebra {
        let arrows = self
            .quiver
            .arrows()
            .iter()
            .map(|a| Arrow { name: a.name.clone(), source: a.target, target: a.source })
            .collect();
        let op_quiver = Quiver::new(self.quiver.vertex_count(), arrows).expect("opposite of a valid quiver is valid");
        let op_relations = self.relations.iter().map(|r| r.reversed(&self.quiver)).collect();
        let op = MonomialAlgebra::with_cap(op_quiver, op_relations, self.field, DEFAULT_BASIS_CAP.max(self.dim()))
            .expect("opposite algebra has the same dimension");
        debug_assert_eq!(op.dim(), self.dim());
        op
    }

    /// Human-readable form, arrows right to left: "a2 a1", or "e_3" for a
    /// trivial path (vertices are displayed 1-based).
    pub fn display_path(&self, p: &Path) -> String {
        if p.is_trivial() {
            return format!("e_{}", p.start() + 1);
        }
        p.arrow_indices()
            .iter()
            .rev()
            .map(|&i| self.quiver.arrows()[i].name.as_str())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// All paths of kQ containing no relation as a contiguous subpath, BFS by
/// length then arrow index: trivial paths first (vertex order), then length
/// 1, and so on. Errors out once more than `cap` basis paths exist.
pub fn enumerate_basis(quiver: &Quiver, relations: &[Path], cap: usize) -> Result<Vec<Path>, AlgebraError> {
    let mut basis: Vec<Path> = (0..quiver.vertex_count()).map(Path::trivial).collect();
    if basis.len() > cap {
        return Err(AlgebraError::NotFiniteDimensional { cap });
    }
    let mut frontier: Vec<Path> = basis.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for p in &frontier {
            let at = p.end(quiver);
            for (a, arrow) in quiver.arrows().iter().enumerate() {
                if arrow.source != at {
                    continue;
                }
                let mut arrows = p.arrow_indices().to_vec();
                arrows.push(a);
                let cand = Path { start: p.start(), arrows };
                // p is relation-free, so only suffixes ending at the new
                // arrow can complete a relation.
                let w = cand.arrow_indices();
                let blocked = relations.iter().any(|r| {
                    let rw = r.arrow_indices();
                    w.len() >= rw.len() && &w[w.len() - rw.len()..] == rw
                });
                if !blocked {
                    next.push(cand);
                }
            }
        }
        basis.extend(next.iter().cloned());
        if basis.len() > cap {
            return Err(AlgebraError::NotFiniteDimensional { cap });
        }
        frontier = next;
    }
    Ok(basis)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> Field {
        Field::prime(2).unwrap()
    }

    fn arrow(name: &str, s: usize, t: usize) -> Arrow {
        Arrow { name: name.into(), source: s, target: t }
    }

    /// The running 4-vertex example: 1 --a1--> 2, 2 --a2--> 3, 2 --a3--> 4,
    /// relations a2 a1 and a3 a1 (0-based internally).
    pub(crate) fn four_vertex_algebra() -> MonomialAlgebra {
        let q = Quiver::new(4, vec![arrow("a1", 0, 1), arrow("a2", 1, 2), arrow("a3", 1, 3)]).unwrap();
        let rels = vec![
            Path::from_arrows(&q, vec![0, 1]).unwrap(), // a1 then a2
            Path::from_arrows(&q, vec![0, 2]).unwrap(), // a1 then a3
        ];
        MonomialAlgebra::new(q, rels, f2()).unwrap()
    }

    fn loop_algebra(m: usize) -> MonomialAlgebra {
        let q = Quiver::new(1, vec![arrow("x", 0, 0)]).unwrap();
        let rel = Path::from_arrows(&q, vec![0; m]).unwrap();
        MonomialAlgebra::new(q, vec![rel], f2()).unwrap()
    }

    #[test]
    fn four_vertex_basis_is_the_seven_expected_paths() {
        let alg = four_vertex_algebra();
        assert_eq!(alg.dim(), 7);
        let q = alg.quiver();
        let expected = [
            Path::trivial(0),
            Path::trivial(1),
            Path::trivial(2),
            Path::trivial(3),
            Path::from_arrows(q, vec![0]).unwrap(),
            Path::from_arrows(q, vec![1]).unwrap(),
            Path::from_arrows(q, vec![2]).unwrap(),
        ];
        assert_eq!(alg.basis(), &expected);
    }

    #[test]
    fn loop_algebra_basis() {
        let alg = loop_algebra(3);
        assert_eq!(alg.dim(), 3);
        assert_eq!(alg.basis()[2].len(), 2);
    }

    #[test]
    fn unbounded_loop_is_rejected() {
        let q = Quiver::new(1, vec![arrow("x", 0, 0)]).unwrap();
        let err = MonomialAlgebra::with_cap(q, vec![], f2(), 50).unwrap_err();
        assert_eq!(err, AlgebraError::NotFiniteDimensional { cap: 50 });
    }

    #[test]
    fn composition_respects_relations_and_endpoints() {
        let alg = four_vertex_algebra();
        let q = alg.quiver();
        let a1 = Path::from_arrows(q, vec![0]).unwrap();
        let a2 = Path::from_arrows(q, vec![1]).unwrap();
        // a2 . a1 is a relation
        assert_eq!(alg.compose(&a2, &a1), PathProduct::Zero);
        // e2 . a1 = a1, a1 . e1 = a1
        assert_eq!(alg.compose(&Path::trivial(1), &a1), PathProduct::Path(a1.clone()));
        assert_eq!(alg.compose(&a1, &Path::trivial(0)), PathProduct::Path(a1.clone()));
        // endpoint mismatch: e1 . a1 = 0
        assert_eq!(alg.compose(&Path::trivial(0), &a1), PathProduct::Zero);
    }

    #[test]
    fn composition_of_basis_paths_is_zero_or_basis() {
        // closure invariant, exhaustively on two corpus-sized algebras
        for alg in [four_vertex_algebra(), loop_algebra(4)] {
            for p in alg.basis() {
                for q in alg.basis() {
                    match alg.compose(p, q) {
                        PathProduct::Zero => {}
                        PathProduct::Path(r) => {
                            assert!(alg.basis_index(&r).is_some());
                            assert_eq!(r.len(), p.len() + q.len());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn opposite_is_an_involution_preserving_dimension() {
        let alg = four_vertex_algebra();
        let op = alg.opposite();
        assert_eq!(op.dim(), alg.dim());
        assert_eq!(op.opposite(), alg);
        // a1 in the opposite goes 2 -> 1
        let a = &op.quiver().arrows()[0];
        assert_eq!((a.source, a.target), (1, 0));
        // reversed relation a1 a2 (apply a2 first) exists in the opposite
        let rel = &op.relations()[0];
        assert_eq!(rel.arrow_indices(), &[1, 0]);
    }

    #[test]
    fn basis_matches_brute_force_enumeration() {
        // independent oracle: generate every arrow sequence up to length 6,
        // keep composable relation-free ones, compare as sets.
        let alg = four_vertex_algebra();
        let q = alg.quiver();
        let mut expected: Vec<Path> = (0..q.vertex_count()).map(Path::trivial).collect();
        let mut grow: Vec<Vec<usize>> = (0..q.arrow_count()).map(|a| vec![a]).collect();
        for _ in 0..6 {
            let mut next = vec![];
            for seq in &grow {
                if let Ok(p) = Path::from_arrows(q, seq.clone()) {
                    let w = p.arrow_indices();
                    let has_rel = alg.relations().iter().any(|r| {
                        let rw = r.arrow_indices();
                        w.len() >= rw.len() && (0..=w.len() - rw.len()).any(|s| &w[s..s + rw.len()] == rw)
                    });
                    if !has_rel {
                        expected.push(p.clone());
                    }
                }
                for a in 0..q.arrow_count() {
                    let mut s = seq.clone();
                    s.push(a);
                    next.push(s);
                }
            }
            grow = next;
        }
        let mut got: Vec<Path> = alg.basis().to_vec();
        got.sort();
        expected.sort();
        expected.dedup();
        assert_eq!(got, expected);
    }

    #[test]
    fn display_reads_right_to_left() {
        let alg = four_vertex_algebra();
        let q = alg.quiver();
        let p = Path::from_arrows(q, vec![0]).unwrap();
        assert_eq!(alg.display_path(&p), "a1");
        assert_eq!(alg.display_path(&Path::trivial(2)), "e_3");
        let loop3 = loop_algebra(3);
        let xx = Path::from_arrows(loop3.quiver(), vec![0, 0]).unwrap();
        assert_eq!(loop3.display_path(&xx), "x x");
    }

    #[test]
    fn bad_inputs_are_rejected() {
        assert_eq!(Quiver::new(0, vec![]).unwrap_err(), AlgebraError::EmptyQuiver);
        let err = Quiver::new(2, vec![arrow("a", 0, 5)]).unwrap_err();
        assert!(matches!(err, AlgebraError::BadVertex { .. }));
        let err = Quiver::new(2, vec![arrow("a", 0, 1), arrow("a", 1, 0)]).unwrap_err();
        assert_eq!(err, AlgebraError::DuplicateArrowName("a".into()));
        // relation of length 1 violates admissibility
        let q = Quiver::new(2, vec![arrow("a", 0, 1)]).unwrap();
        let p = Path::from_arrows(&q, vec![0]).unwrap();
        assert!(matches!(MonomialAlgebra::new(q, vec![p], f2()), Err(AlgebraError::BadRelation(_))));
    }
}
