//! Finite-dimensional left modules over a monomial algebra, presented as
//! quiver representations: a dimension per vertex and a matrix per arrow
//! (shape dim(target) x dim(source)) with all relation composites zero.
//!
//! Right modules never get their own type: a right A-module is always a
//! left module over `A.opposite()`. The k-linear dual [`k_dual`] swaps the
//! two and is an exact involution (bit-equal double dual).
//!
//! Everything here is canonical and deterministic: kernels, cokernels and
//! hom bases come from [`Mat`]'s RREF-based routines, so repeated runs give
//! identical bases and downstream resolutions are reproducible.

pub mod hom;
pub mod iso;

use crate::linalg::mat::Mat;
use crate::path_algebra::{MonomialAlgebra, Path};
use std::collections::HashMap;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RepError {
    #[error("expected {expected} arrow matrices, got {got}")]
    WrongArrowCount { expected: usize, got: usize },
    #[error("matrix for arrow '{arrow}' has shape {got_rows}x{got_cols}, expected {rows}x{cols}")]
    BadShape { arrow: String, rows: usize, cols: usize, got_rows: usize, got_cols: usize },
    #[error("matrix for arrow '{arrow}' is over the wrong field")]
    WrongField { arrow: String },
    #[error("relation '{relation}' does not act by zero")]
    RelationNotSatisfied { relation: String },
    #[error("map blocks do not commute with the action of arrow '{arrow}'")]
    NotAMap { arrow: String },
    #[error("source and target live over different algebras")]
    AlgebraMismatch,
    #[error("map block at vertex {vertex} has shape {got_rows}x{got_cols}, expected {rows}x{cols}")]
    BadBlockShape { vertex: usize, rows: usize, cols: usize, got_rows: usize, got_cols: usize },
}

/// A representation of the bound quiver: one vector space per vertex, one
/// matrix per arrow.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rep {
    alg: Arc<MonomialAlgebra>,
    dims: Vec<usize>,
    mats: Vec<Mat>,
}

impl Rep {
    pub fn new(alg: Arc<MonomialAlgebra>, dims: Vec<usize>, mats: Vec<Mat>) -> Result<Rep, RepError> {
        let q = alg.quiver();
        assert_eq!(dims.len(), q.vertex_count(), "one dimension per vertex");
        if mats.len() != q.arrow_count() {
            return Err(RepError::WrongArrowCount { expected: q.arrow_count(), got: mats.len() });
        }
        for (a, arrow) in q.arrows().iter().enumerate() {
            let (rows, cols) = (dims[arrow.target], dims[arrow.source]);
            if mats[a].rows() != rows || mats[a].cols() != cols {
                return Err(RepError::BadShape {
                    arrow: arrow.name.clone(),
                    rows,
                    cols,
                    got_rows: mats[a].rows(),
                    got_cols: mats[a].cols(),
                });
            }
            if mats[a].field() != alg.field() {
                return Err(RepError::WrongField { arrow: arrow.name.clone() });
            }
        }
        let rep = Rep { alg, dims, mats };
        for r in rep.alg.relations() {
            if !rep.path_matrix(r).is_zero() {
                return Err(RepError::RelationNotSatisfied { relation: rep.alg.display_path(r) });
            }
        }
        Ok(rep)
    }

    pub fn zero(alg: Arc<MonomialAlgebra>) -> Rep {
        let field = alg.field();
        let dims = vec![0; alg.vertex_count()];
        let mats = alg.quiver().arrows().iter().map(|_| Mat::zero(field, 0, 0)).collect();
        Rep { alg, dims, mats }
    }

    pub fn alg(&self) -> &Arc<MonomialAlgebra> {
        &self.alg
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_at(&self, v: usize) -> usize {
        self.dims[v]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn arrow_matrix(&self, a: usize) -> &Mat {
        &self.mats[a]
    }

    /// The matrix by which a path acts, shape dim(end) x dim(start).
    pub fn path_matrix(&self, p: &Path) -> Mat {
        let mut m = Mat::identity(self.alg.field(), self.dims[p.start()]);
        for &a in p.arrow_indices() {
            m = self.mats[a].mul(&m);
        }
        m
    }

    /// Block-diagonal direct sum, summand order preserved within each vertex.
    pub fn direct_sum(parts: &[&Rep]) -> Rep {
        assert!(!parts.is_empty(), "direct_sum needs at least one summand");
        let alg = parts[0].alg.clone();
        let field = alg.field();
        for p in parts {
            assert_eq!(**p.alg(), *alg, "summands must share the algebra");
        }
        let n = alg.vertex_count();
        let dims: Vec<usize> = (0..n).map(|v| parts.iter().map(|p| p.dims[v]).sum()).collect();
        let mats = alg
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, arrow)| {
                Mat::from_fn(field, dims[arrow.target], dims[arrow.source], |r, c| {
                    let (mut ro, mut co) = (0, 0);
                    for p in parts {
                        let (pr, pc) = (p.dims[arrow.target], p.dims[arrow.source]);
                        let r_here = r >= ro && r < ro + pr;
                        let c_here = c >= co && c < co + pc;
                        if r_here && c_here {
                            return p.mats[a].get(r - ro, c - co);
                        }
                        if r_here || c_here {
                            return 0; // off-diagonal block
                        }
                        ro += pr;
                        co += pc;
                    }
                    0
                })
            })
            .collect();
        Rep { alg, dims, mats }
    }
}

/// The simple module S(v): one-dimensional at v, zero elsewhere.
pub fn simple_module(alg: &Arc<MonomialAlgebra>, v: usize) -> Rep {
    let field = alg.field();
    let mut dims = vec![0; alg.vertex_count()];
    dims[v] = 1;
    let mats = alg
        .quiver()
        .arrows()
        .iter()
        .map(|a| Mat::zero(field, dims[a.target], dims[a.source]))
        .collect();
    Rep { alg: alg.clone(), dims, mats }
}

/// Coordinate bookkeeping for a finite direct sum of indecomposable
/// projectives P(v). Coordinates at each vertex are summand-major, and
/// inside one summand follow the algebra's basis order, so the layout is
/// canonical given the summand list.
#[derive(Debug, Clone)]
pub struct ProjBasis {
    /// Vertex of each summand, in order.
    pub summands: Vec<usize>,
    /// coords[w][i] = (summand position, algebra basis index of the path).
    pub coords: Vec<Vec<(usize, usize)>>,
    position: HashMap<(usize, usize), (usize, usize)>,
}

impl ProjBasis {
    /// Vertex and coordinate of the generator e_{v_s} of summand s.
    pub fn generator(&self, alg: &MonomialAlgebra, s: usize) -> (usize, usize) {
        let v = self.summands[s];
        let trivial = alg.basis_index(&Path::trivial(v)).expect("trivial paths are basis elements");
        self.position[&(s, trivial)]
    }

    /// Vertex and coordinate of path `path_idx` (algebra basis index) in
    /// summand s.
    pub fn coord_of(&self, s: usize, path_idx: usize) -> (usize, usize) {
        self.position[&(s, path_idx)]
    }
}

/// Direct sum of indecomposable projective left modules P(v) for v in
/// `summands`, together with its path-coordinate layout. P(v) = A e_v has
/// basis the paths starting at v; an arrow acts by left multiplication.
pub fn proj_sum(alg: &Arc<MonomialAlgebra>, summands: &[usize]) -> (Rep, ProjBasis) {
    let field = alg.field();
    let n = alg.vertex_count();
    let mut coords: Vec<Vec<(usize, usize)>> = vec![vec![]; n];
    for (s, &v) in summands.iter().enumerate() {
        for &i in alg.paths_starting_at(v) {
            let w = alg.basis()[i].end(alg.quiver());
            coords[w].push((s, i));
        }
    }
    let position: HashMap<(usize, usize), (usize, usize)> = coords
        .iter()
        .enumerate()
        .flat_map(|(w, list)| list.iter().enumerate().map(move |(j, &key)| (key, (w, j))))
        .collect();
    let dims: Vec<usize> = coords.iter().map(|c| c.len()).collect();
    let mats: Vec<Mat> = alg
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(a, arrow)| {
            let mut m = Mat::zero(field, dims[arrow.target], dims[arrow.source]);
            for (col, &(s, i)) in coords[arrow.source].iter().enumerate() {
                if let Some(ext) = alg.left_mul_arrow(a, i) {
                    let (w, row) = position[&(s, ext)];
                    debug_assert_eq!(w, arrow.target);
                    m.set(row, col, field.one());
                }
            }
            m
        })
        .collect();
    let rep = Rep { alg: alg.clone(), dims, mats };
    (rep, ProjBasis { summands: summands.to_vec(), coords, position })
}

/// The indecomposable projective P(v).
pub fn projective_module(alg: &Arc<MonomialAlgebra>, v: usize) -> Rep {
    proj_sum(alg, &[v]).0
}

/// The algebra as a left module over itself: ⊕_v P(v) in vertex order.
pub fn regular_module(alg: &Arc<MonomialAlgebra>) -> Rep {
    let all: Vec<usize> = (0..alg.vertex_count()).collect();
    proj_sum(alg, &all).0
}

/// The k-linear dual: a left module over `target`, which must be the
/// opposite of `rep`'s algebra. Dimensions are unchanged and every arrow
/// matrix is transposed, so applying it twice gives back `rep` exactly.
pub fn k_dual(rep: &Rep, target: &Arc<MonomialAlgebra>) -> Rep {
    debug_assert_eq!(rep.alg.opposite(), **target, "k_dual target must be the opposite algebra");
    let mats = rep.mats.iter().map(Mat::transpose).collect();
    Rep { alg: target.clone(), dims: rep.dims.clone(), mats }
}

/// The indecomposable injective I(v) = D(P_op(v)), socle S(v).
pub fn injective_module(alg: &Arc<MonomialAlgebra>, v: usize) -> Rep {
    let op = Arc::new(alg.opposite());
    k_dual(&projective_module(&op, v), alg)
}

/// A multiset of simple modules, recorded as a multiplicity per vertex.
/// This is how resolution terms, socles and tops are reported.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleMultiset {
    counts: Vec<usize>,
}

impl SimpleMultiset {
    pub fn new(vertex_count: usize) -> SimpleMultiset {
        SimpleMultiset { counts: vec![0; vertex_count] }
    }

    pub fn from_counts(counts: Vec<usize>) -> SimpleMultiset {
        SimpleMultiset { counts }
    }

    pub fn add(&mut self, v: usize, mult: usize) {
        self.counts[v] += mult;
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn multiplicity(&self, v: usize) -> usize {
        self.counts[v]
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.total() == 0
    }

    /// Vertices with nonzero multiplicity.
    pub fn support(&self) -> Vec<usize> {
        (0..self.counts.len()).filter(|&v| self.counts[v] > 0).collect()
    }

    pub fn is_submultiset_of(&self, other: &SimpleMultiset) -> bool {
        self.counts.iter().zip(&other.counts).all(|(a, b)| a <= b)
    }

    pub fn is_subset_of(&self, other: &SimpleMultiset) -> bool {
        self.counts.iter().zip(&other.counts).all(|(&a, &b)| a == 0 || b > 0)
    }

    /// Pointwise sum.
    pub fn union(&self, other: &SimpleMultiset) -> SimpleMultiset {
        let counts = self.counts.iter().zip(&other.counts).map(|(a, b)| a + b).collect();
        SimpleMultiset { counts }
    }

    /// "2:1,3:2" with 1-based vertices, ascending; "-" when empty.
    pub fn render_one_based(&self) -> String {
        if self.is_empty() {
            return "-".into();
        }
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(v, m)| format!("{}:{}", v + 1, m))
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Parse the `render_one_based` format.
    pub fn from_one_based(s: &str, vertex_count: usize) -> Result<SimpleMultiset, String> {
        let mut out = SimpleMultiset::new(vertex_count);
        if s == "-" {
            return Ok(out);
        }
        for part in s.split(',') {
            let (v, m) = part.split_once(':').ok_or_else(|| format!("bad multiset entry '{part}'"))?;
            let v: usize = v.trim().parse().map_err(|_| format!("bad vertex in '{part}'"))?;
            let m: usize = m.trim().parse().map_err(|_| format!("bad multiplicity in '{part}'"))?;
            if v == 0 || v > vertex_count {
                return Err(format!("vertex {v} out of range 1..={vertex_count}"));
            }
            if m == 0 {
                return Err(format!("zero multiplicity for vertex {v}"));
            }
            if out.counts[v - 1] > 0 {
                return Err(format!("vertex {v} listed twice"));
            }
            out.counts[v - 1] = m;
        }
        Ok(out)
    }
}

/// A homomorphism of representations: one block per vertex, shape
/// dim_target(v) x dim_source(v), commuting with every arrow.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepMap {
    src: Rep,
    tgt: Rep,
    blocks: Vec<Mat>,
}

impl RepMap {
    pub fn new(src: Rep, tgt: Rep, blocks: Vec<Mat>) -> Result<RepMap, RepError> {
        if src.alg != tgt.alg {
            return Err(RepError::AlgebraMismatch);
        }
        assert_eq!(blocks.len(), src.alg.vertex_count(), "one block per vertex");
        for (v, b) in blocks.iter().enumerate() {
            if b.rows() != tgt.dims[v] || b.cols() != src.dims[v] {
                return Err(RepError::BadBlockShape {
                    vertex: v,
                    rows: tgt.dims[v],
                    cols: src.dims[v],
                    got_rows: b.rows(),
                    got_cols: b.cols(),
                });
            }
        }
        for (a, arrow) in src.alg.quiver().arrows().iter().enumerate() {
            let lhs = blocks[arrow.target].mul(src.arrow_matrix(a));
            let rhs = tgt.arrow_matrix(a).mul(&blocks[arrow.source]);
            if lhs != rhs {
                return Err(RepError::NotAMap { arrow: arrow.name.clone() });
            }
        }
        Ok(RepMap { src, tgt, blocks })
    }

    pub fn zero(src: Rep, tgt: Rep) -> RepMap {
        let field = src.alg.field();
        let blocks = (0..src.alg.vertex_count()).map(|v| Mat::zero(field, tgt.dims[v], src.dims[v])).collect();
        RepMap { src, tgt, blocks }
    }

    pub fn identity(rep: &Rep) -> RepMap {
        let field = rep.alg.field();
        let blocks = rep.dims.iter().map(|&d| Mat::identity(field, d)).collect();
        RepMap { src: rep.clone(), tgt: rep.clone(), blocks }
    }

    pub fn src(&self) -> &Rep {
        &self.src
    }

    pub fn tgt(&self) -> &Rep {
        &self.tgt
    }

    pub fn block(&self, v: usize) -> &Mat {
        &self.blocks[v]
    }

    pub fn blocks(&self) -> &[Mat] {
        &self.blocks
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Mat::is_zero)
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().map(Mat::rank).sum()
    }

    /// g.then(f) = f ∘ g (apply self first).
    pub fn then(&self, next: &RepMap) -> RepMap {
        assert_eq!(self.tgt, next.src, "composition endpoint mismatch");
        let blocks = self.blocks.iter().zip(&next.blocks).map(|(g, f)| f.mul(g)).collect();
        RepMap { src: self.src.clone(), tgt: next.tgt.clone(), blocks }
    }

    pub fn add(&self, other: &RepMap) -> RepMap {
        assert_eq!(self.src, other.src);
        assert_eq!(self.tgt, other.tgt);
        let blocks = self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.add(b)).collect();
        RepMap { src: self.src.clone(), tgt: self.tgt.clone(), blocks }
    }

    pub fn scale(&self, c: u64) -> RepMap {
        let blocks = self.blocks.iter().map(|b| b.scale(c)).collect();
        RepMap { src: self.src.clone(), tgt: self.tgt.clone(), blocks }
    }

    /// Kernel as a representation plus its inclusion into the source.
    pub fn kernel(&self) -> (Rep, RepMap) {
        let alg = self.src.alg.clone();
        let incl_blocks: Vec<Mat> = self.blocks.iter().map(Mat::kernel_basis).collect();
        let dims: Vec<usize> = incl_blocks.iter().map(Mat::cols).collect();
        let mats = alg
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, arrow)| {
                let carried = self.src.arrow_matrix(a).mul(&incl_blocks[arrow.source]);
                incl_blocks[arrow.target]
                    .solve(&carried)
                    .expect("arrow action preserves the kernel")
            })
            .collect();
        let ker = Rep { alg, dims, mats };
        let incl = RepMap { src: ker.clone(), tgt: self.src.clone(), blocks: incl_blocks };
        (ker, incl)
    }

    /// Cokernel as a representation plus the projection from the target.
    pub fn cokernel(&self) -> (Rep, RepMap) {
        let alg = self.src.alg.clone();
        let quotients: Vec<_> = self.blocks.iter().map(Mat::quotient_data).collect();
        let dims: Vec<usize> = quotients.iter().map(|q| q.projection.rows()).collect();
        let mats = alg
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, arrow)| {
                quotients[arrow.target]
                    .projection
                    .mul(self.tgt.arrow_matrix(a))
                    .mul(&quotients[arrow.source].section)
            })
            .collect();
        let coker = Rep { alg, dims, mats };
        let proj_blocks = quotients.into_iter().map(|q| q.projection).collect();
        let proj = RepMap { src: self.tgt.clone(), tgt: coker.clone(), blocks: proj_blocks };
        (coker, proj)
    }

    /// Image as a representation plus its inclusion into the target.
    pub fn image(&self) -> (Rep, RepMap) {
        let alg = self.src.alg.clone();
        let incl_blocks: Vec<Mat> = self.blocks.iter().map(|b| b.column_basis().1).collect();
        let dims: Vec<usize> = incl_blocks.iter().map(Mat::cols).collect();
        let mats = alg
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, arrow)| {
                let carried = self.tgt.arrow_matrix(a).mul(&incl_blocks[arrow.source]);
                incl_blocks[arrow.target]
                    .solve(&carried)
                    .expect("arrow action preserves the image")
            })
            .collect();
        let im = Rep { alg, dims, mats };
        let incl = RepMap { src: im.clone(), tgt: self.tgt.clone(), blocks: incl_blocks };
        (im, incl)
    }

    /// Factor self = incl ∘ g through an inclusion whose image contains
    /// im(self); returns g, or None if containment fails at some vertex.
    pub fn factor_through(&self, incl: &RepMap) -> Option<RepMap> {
        assert_eq!(self.tgt, incl.tgt, "factor_through endpoint mismatch");
        let mut blocks = Vec::with_capacity(self.blocks.len());
        for (b, i) in self.blocks.iter().zip(&incl.blocks) {
            blocks.push(i.solve(b)?);
        }
        Some(RepMap { src: self.src.clone(), tgt: incl.src.clone(), blocks })
    }

    /// Per-vertex inverse; the blocks of an invertible map invert to a map.
    pub fn inverse(&self) -> Option<RepMap> {
        let mut blocks = Vec::with_capacity(self.blocks.len());
        for b in &self.blocks {
            blocks.push(b.inverse()?);
        }
        Some(RepMap { src: self.tgt.clone(), tgt: self.src.clone(), blocks })
    }

    pub fn is_isomorphism_map(&self) -> bool {
        self.blocks.iter().all(Mat::is_invertible)
    }
}

/// Smallest subrepresentation containing the given column spans (one
/// matrix of seed columns per vertex), with its inclusion map.
pub fn submodule_spanned(rep: &Rep, seeds: &[Mat]) -> (Rep, RepMap) {
    let alg = rep.alg.clone();
    let n = alg.vertex_count();
    assert_eq!(seeds.len(), n);
    let mut spans: Vec<Mat> = (0..n)
        .map(|v| {
            assert_eq!(seeds[v].rows(), rep.dims[v], "seed rows must match the module dimension");
            seeds[v].column_basis().1
        })
        .collect();
    loop {
        let mut grew = false;
        for (a, arrow) in alg.quiver().arrows().iter().enumerate() {
            let pushed = rep.arrow_matrix(a).mul(&spans[arrow.source]);
            let joined = spans[arrow.target].hstack(&pushed).column_basis().1;
            if joined.cols() > spans[arrow.target].cols() {
                spans[arrow.target] = joined;
                grew = true;
            }
        }
        if !grew {
            break;
        }
    }
    let dims: Vec<usize> = spans.iter().map(Mat::cols).collect();
    let mats = alg
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(a, arrow)| {
            let carried = rep.arrow_matrix(a).mul(&spans[arrow.source]);
            spans[arrow.target].solve(&carried).expect("spans are closed under arrows")
        })
        .collect();
    let sub = Rep { alg, dims, mats };
    let incl = RepMap { src: sub.clone(), tgt: rep.clone(), blocks: spans };
    (sub, incl)
}
