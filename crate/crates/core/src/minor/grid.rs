use serde::{Deserialize, Serialize};

use crate::error::MinorError;
use crate::graph::{Graph, Vertex};
use crate::par::Execution;

/// Dense 0/1 matrix with bit-packed rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoolMatrix {
    rows: usize,
    cols: usize,
    words: usize,
    data: Vec<u64>,
}

impl BoolMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        let words = cols.div_ceil(64).max(1);
        BoolMatrix {
            rows,
            cols,
            words,
            data: vec![0; rows * words],
        }
    }

    pub fn from_rows(rows: &[Vec<bool>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = BoolMatrix::new(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged matrix");
            for (j, &b) in row.iter().enumerate() {
                if b {
                    m.set(i, j);
                }
            }
        }
        m
    }

    pub fn identity(m: usize) -> Self {
        let mut x = BoolMatrix::new(m, m);
        (0..m).for_each(|i| x.set(i, i));
        x
    }

    pub fn ones(rows: usize, cols: usize) -> Self {
        let mut x = BoolMatrix::new(rows, cols);
        for i in 0..rows {
            (0..cols).for_each(|j| x.set(i, j));
        }
        x
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn set(&mut self, i: usize, j: usize) {
        self.data[i * self.words + j / 64] |= 1 << (j % 64);
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.words..(i + 1) * self.words]
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> BoolMatrix {
        let mut m = BoolMatrix::new(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                if self.get(i, j) {
                    m.set(a, b);
                }
            }
        }
        m
    }

    /// Whether the block `rows × cols` (half-open ranges) holds a 1.
    pub fn block_has_one(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> bool {
        rows.into_iter().any(|i| cols.clone().any(|j| self.get(i, j)))
    }
}

/// Chords of `cycle` as a matrix indexed by cycle positions. Cycle edges
/// are left out: they join consecutive arcs anyway and would let every
/// diagonal block pass.
pub fn chord_matrix(g: &Graph, cycle: &[Vertex]) -> BoolMatrix {
    let t = cycle.len();
    let mut pos = vec![usize::MAX; g.n()];
    for (i, &v) in cycle.iter().enumerate() {
        pos[v] = i;
    }
    let mut m = BoolMatrix::new(t, t);
    for (i, &v) in cycle.iter().enumerate() {
        for &w in g.neighbors(v) {
            let j = pos[w];
            if j == usize::MAX {
                continue;
            }
            let d = i.abs_diff(j);
            if d != 1 && d != t - 1 {
                m.set(i, j);
            }
        }
    }
    m
}

/// Cut positions `0 = i_0 < … < i_a = m` for rows and columns.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridPartition {
    pub row_cuts: Vec<usize>,
    pub col_cuts: Vec<usize>,
    pub a: usize,
    /// False when produced by the heuristic sweep.
    pub exact: bool,
}

impl GridPartition {
    pub fn is_valid_for(&self, m: &BoolMatrix) -> bool {
        let ok_cuts = |c: &[usize], len: usize| {
            c.len() == self.a + 1 && c[0] == 0 && c[self.a] == len && c.windows(2).all(|w| w[0] < w[1])
        };
        ok_cuts(&self.row_cuts, m.rows())
            && ok_cuts(&self.col_cuts, m.cols())
            && (0..self.a).all(|x| {
                (0..self.a).all(|y| {
                    m.block_has_one(
                        self.row_cuts[x]..self.row_cuts[x + 1],
                        self.col_cuts[y]..self.col_cuts[y + 1],
                    )
                })
            })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GridSearch {
    Found(GridPartition),
    /// With `exact` this proves that no partition exists.
    NotFound { exact: bool },
}

/// Sizes at which the exhaustive search is still run.
pub(crate) fn exact_regime(m: usize, a: usize) -> bool {
    m <= 60 || a <= 4
}

/// `a × a` block partition of a square matrix with a 1 in every block.
/// The exact search returns the lexicographically smallest cut tuple.
pub fn grid_block_partition(m: &BoolMatrix, a: usize) -> Result<GridSearch, MinorError> {
    grid_block_partition_with(m, a, Execution::default())
}

pub fn grid_block_partition_with(
    m: &BoolMatrix,
    a: usize,
    exec: Execution,
) -> Result<GridSearch, MinorError> {
    if m.rows() != m.cols() {
        return Err(MinorError::Precondition(format!(
            "matrix is {}×{}, not square",
            m.rows(),
            m.cols()
        )));
    }
    if a == 0 {
        return Err(MinorError::Precondition("grid size must be at least 1".into()));
    }
    if a > m.rows() {
        return Err(MinorError::GridTooLarge { a, m: m.rows() });
    }
    let exact = exact_regime(m.rows(), a);
    let found = if exact {
        rect_partition(m, a, exec)
    } else {
        heuristic_partition(m, a)
    };
    Ok(match found {
        Some((row_cuts, col_cuts)) => {
            let p = GridPartition { row_cuts, col_cuts, a, exact };
            assert!(p.is_valid_for(m));
            GridSearch::Found(p)
        }
        None => GridSearch::NotFound { exact },
    })
}

/// Greedy left-to-right column cuts for fixed row bands, each band given
/// as the OR of its rows. Cutting as soon as every band has a 1 maximises
/// the number of column bands; returns that count and the cuts, with the
/// final band stretched to the last column when at least `a` fit.
fn greedy_columns(bands: &[Vec<u64>], cols: usize, a: usize) -> (usize, Vec<usize>) {
    let mut cuts = vec![0];
    let mut satisfied = vec![false; bands.len()];
    let mut missing = bands.len();
    for j in 0..cols {
        for (b, band) in bands.iter().enumerate() {
            if !satisfied[b] && band[j / 64] >> (j % 64) & 1 == 1 {
                satisfied[b] = true;
                missing -= 1;
            }
        }
        if missing == 0 {
            cuts.push(j + 1);
            satisfied.fill(false);
            missing = bands.len();
        }
    }
    let count = cuts.len() - 1;
    if count >= a {
        cuts.truncate(a);
        cuts.push(cols);
    }
    (count, cuts)
}

fn or_rows(m: &BoolMatrix, rows: std::ops::Range<usize>) -> Vec<u64> {
    let mut acc = vec![0u64; m.words];
    for i in rows {
        for (w, &x) in acc.iter_mut().zip(m.row(i)) {
            *w |= x;
        }
    }
    acc
}

/// Exhaustive search for `a` row bands and `a` column bands of a possibly
/// rectangular matrix. Row cuts are tried in lexicographic order and a
/// prefix is abandoned once its bands no longer admit `a` column bands.
pub(crate) fn rect_partition(m: &BoolMatrix, a: usize, exec: Execution) -> Option<(Vec<usize>, Vec<usize>)> {
    let rows = m.rows();
    if a == 0 || a > rows || a > m.cols() {
        return None;
    }
    if a == 1 {
        let all = or_rows(m, 0..rows);
        return all.iter().any(|&w| w != 0).then(|| (vec![0, rows], vec![0, m.cols()]));
    }
    let first_cuts: Vec<usize> = (1..=rows - (a - 1)).collect();
    let search = |&i1: &usize| {
        let mut bands = vec![or_rows(m, 0..i1)];
        if greedy_columns(&bands, m.cols(), a).0 < a {
            return None;
        }
        let mut cuts = vec![0, i1];
        extend_rows(m, a, &mut cuts, &mut bands).then(|| {
            let (_, cols) = greedy_columns(&bands, m.cols(), a);
            (cuts, cols)
        })
    };
    exec.find_map_first(&first_cuts, search)
}

fn extend_rows(m: &BoolMatrix, a: usize, cuts: &mut Vec<usize>, bands: &mut Vec<Vec<u64>>) -> bool {
    let rows = m.rows();
    let start = *cuts.last().expect("cuts start at 0");
    let remaining = a - bands.len();
    if remaining == 1 {
        bands.push(or_rows(m, start..rows));
        if greedy_columns(bands, m.cols(), a).0 >= a {
            cuts.push(rows);
            return true;
        }
        bands.pop();
        return false;
    }
    for next in start + 1..=rows - (remaining - 1) {
        bands.push(or_rows(m, start..next));
        if greedy_columns(bands, m.cols(), a).0 >= a {
            cuts.push(next);
            if extend_rows(m, a, cuts, bands) {
                return true;
            }
            cuts.pop();
        }
        bands.pop();
    }
    false
}

/// Row bands grown until their OR covers `a` columns, then greedy columns.
fn heuristic_partition(m: &BoolMatrix, a: usize) -> Option<(Vec<usize>, Vec<usize>)> {
    let rows = m.rows();
    let mut cuts = vec![0];
    let mut bands = Vec::new();
    let mut start = 0;
    while bands.len() + 1 < a {
        let left = a - bands.len() - 1;
        let mut end = start + 1;
        while end + left < rows && count_ones(&or_rows(m, start..end)) < a {
            end += 1;
        }
        if end + left > rows {
            return None;
        }
        bands.push(or_rows(m, start..end));
        cuts.push(end);
        start = end;
    }
    if start >= rows {
        return None;
    }
    bands.push(or_rows(m, start..rows));
    cuts.push(rows);
    let (count, cols) = greedy_columns(&bands, m.cols(), a);
    (count >= a).then_some((cuts, cols))
}

fn count_ones(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn found(s: GridSearch) -> GridPartition {
        match s {
            GridSearch::Found(p) => p,
            other => panic!("expected a partition, got {other:?}"),
        }
    }

    #[test]
    fn all_ones_gives_lex_smallest_cuts() {
        let p = found(grid_block_partition(&BoolMatrix::ones(4, 4), 2).unwrap());
        assert_eq!(p.row_cuts, vec![0, 1, 4]);
        assert_eq!(p.col_cuts, vec![0, 1, 4]);
        assert!(p.exact);
    }

    #[test]
    fn identity_has_no_two_by_two_partition() {
        // The top-right block of any 2×2 cut misses the diagonal.
        assert_eq!(
            grid_block_partition(&BoolMatrix::identity(4), 2).unwrap(),
            GridSearch::NotFound { exact: true }
        );
        let p = found(grid_block_partition(&BoolMatrix::identity(4), 1).unwrap());
        assert_eq!(p.row_cuts, vec![0, 4]);
    }

    #[test]
    fn zero_matrix_and_oversized_grid() {
        let z = BoolMatrix::new(5, 5);
        for a in 1..=5 {
            assert_eq!(grid_block_partition(&z, a).unwrap(), GridSearch::NotFound { exact: true });
        }
        assert!(matches!(
            grid_block_partition(&z, 6),
            Err(MinorError::GridTooLarge { a: 6, m: 5 })
        ));
    }

    #[test]
    fn sequential_matches_parallel() {
        let g = Graph::complete(12);
        let m = chord_matrix(&g, &(0..12).collect::<Vec<_>>());
        for a in 1..=6 {
            assert_eq!(
                grid_block_partition_with(&m, a, Execution::Sequential).unwrap(),
                grid_block_partition_with(&m, a, Execution::Parallel).unwrap()
            );
        }
    }

    #[test]
    fn chord_matrix_skips_cycle_edges() {
        let m = chord_matrix(&Graph::complete(5), &[0, 1, 2, 3, 4]);
        assert!(!m.get(0, 1) && !m.get(0, 4) && !m.get(2, 2));
        assert!(m.get(0, 2) && m.get(3, 0));
        assert_eq!(chord_matrix(&Graph::cycle(6).unwrap(), &[0, 1, 2, 3, 4, 5]), BoolMatrix::new(6, 6));
    }

    #[test]
    fn heuristic_finds_a_valid_partition_on_ones() {
        let m = BoolMatrix::ones(70, 70);
        let p = found(grid_block_partition(&m, 7).unwrap());
        assert!(!p.exact);
        assert!(p.is_valid_for(&m));
    }
}
