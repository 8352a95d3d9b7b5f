//! Hom spaces and the standard structural subquotients (socle, radical,
//! top).
//!
//! `hom_basis` solves the intertwining equations f_w M_a = N_a f_v as one
//! linear system; the kernel basis of that system is canonical, so the
//! returned list of maps is deterministic and downstream searches over
//! Hom(M, N) are reproducible.

use super::{Rep, RepMap, SimpleMultiset};
use crate::linalg::mat::Mat;

/// Unknowns are the entries of all blocks f_v, ordered by vertex and then
/// row-major within the block.
fn unknown_offsets(src: &Rep, tgt: &Rep) -> (Vec<usize>, usize) {
    let mut offsets = Vec::with_capacity(src.dims().len());
    let mut total = 0;
    for v in 0..src.dims().len() {
        offsets.push(total);
        total += tgt.dims()[v] * src.dims()[v];
    }
    (offsets, total)
}

/// A basis of Hom(M, N) as representation maps.
pub fn hom_basis(m: &Rep, n: &Rep) -> Vec<RepMap> {
    assert_eq!(m.alg(), n.alg(), "hom requires a common algebra");
    let field = m.alg().field();
    let (offsets, unknowns) = unknown_offsets(m, n);
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for (a, arrow) in m.alg().quiver().arrows().iter().enumerate() {
        let (v, w) = (arrow.source, arrow.target);
        let ma = m.arrow_matrix(a);
        let na = n.arrow_matrix(a);
        // equation (r, c): sum_s M_a[s][c] f_w[r][s] - sum_s N_a[r][s] f_v[s][c] = 0
        for r in 0..n.dims()[w] {
            for c in 0..m.dims()[v] {
                let mut row = vec![0u64; unknowns];
                for s in 0..m.dims()[w] {
                    let idx = offsets[w] + r * m.dims()[w] + s;
                    row[idx] = field.add(row[idx], ma.get(s, c));
                }
                for s in 0..n.dims()[v] {
                    let idx = offsets[v] + s * m.dims()[v] + c;
                    row[idx] = field.sub(row[idx], na.get(r, s));
                }
                rows.push(row);
            }
        }
    }
    let system = if rows.is_empty() {
        Mat::zero(field, 0, unknowns)
    } else {
        Mat::from_rows(field, &rows)
    };
    let kernel = system.kernel_basis();
    (0..kernel.cols())
        .map(|k| {
            let blocks = (0..m.dims().len())
                .map(|v| {
                    Mat::from_fn(field, n.dims()[v], m.dims()[v], |r, c| {
                        kernel.get(offsets[v] + r * m.dims()[v] + c, k)
                    })
                })
                .collect();
            RepMap::new(m.clone(), n.clone(), blocks).expect("kernel of the intertwining system is a map")
        })
        .collect()
}

pub fn hom_dim(m: &Rep, n: &Rep) -> usize {
    hom_basis(m, n).len()
}

/// The socle: at each vertex, the intersection of the kernels of the
/// outgoing arrow matrices. Returns the semisimple subrepresentation and
/// its inclusion.
pub fn socle(m: &Rep) -> (Rep, RepMap) {
    let alg = m.alg().clone();
    let field = alg.field();
    let blocks: Vec<Mat> = (0..alg.vertex_count())
        .map(|v| {
            let mut stacked = Mat::zero(field, 0, m.dims()[v]);
            for (a, arrow) in alg.quiver().arrows().iter().enumerate() {
                if arrow.source == v {
                    stacked = stacked.vstack(m.arrow_matrix(a));
                }
            }
            stacked.kernel_basis()
        })
        .collect();
    let dims: Vec<usize> = blocks.iter().map(Mat::cols).collect();
    let mats = alg
        .quiver()
        .arrows()
        .iter()
        .map(|arrow| Mat::zero(field, dims[arrow.target], dims[arrow.source]))
        .collect();
    let soc = Rep::new(alg, dims, mats).expect("socle is semisimple");
    let incl = RepMap::new(soc.clone(), m.clone(), blocks).expect("socle inclusion is a map");
    (soc, incl)
}

pub fn socle_type(m: &Rep) -> SimpleMultiset {
    SimpleMultiset::from_counts(socle(m).0.dims().to_vec())
}

/// The radical JM: at each vertex, the sum of the images of the incoming
/// arrow matrices. Returns the subrepresentation and its inclusion.
pub fn radical(m: &Rep) -> (Rep, RepMap) {
    let alg = m.alg().clone();
    let field = alg.field();
    let incl_blocks: Vec<Mat> = (0..alg.vertex_count())
        .map(|v| {
            let mut joined = Mat::zero(field, m.dims()[v], 0);
            for (a, arrow) in alg.quiver().arrows().iter().enumerate() {
                if arrow.target == v {
                    joined = joined.hstack(m.arrow_matrix(a));
                }
            }
            joined.column_basis().1
        })
        .collect();
    let dims: Vec<usize> = incl_blocks.iter().map(Mat::cols).collect();
    let mats = alg
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(a, arrow)| {
            let carried = m.arrow_matrix(a).mul(&incl_blocks[arrow.source]);
            incl_blocks[arrow.target]
                .solve(&carried)
                .expect("arrows carry the module into the radical")
        })
        .collect();
    let alg2 = alg.clone();
    let rad = Rep::new(alg2, dims, mats).expect("radical is a subrepresentation");
    let incl = RepMap::new(rad.clone(), m.clone(), incl_blocks).expect("radical inclusion is a map");
    (rad, incl)
}

/// The top M/JM with its projection. The top is semisimple.
pub fn top(m: &Rep) -> (Rep, RepMap) {
    let (_, incl) = radical(m);
    incl.cokernel()
}

pub fn top_type(m: &Rep) -> SimpleMultiset {
    SimpleMultiset::from_counts(top(m).0.dims().to_vec())
}
