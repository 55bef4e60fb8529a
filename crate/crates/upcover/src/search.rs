//! Exhaustive backtracking search for upmatrices and uptori at fixed
//! dimensions. Cells are assigned in row-major order over the alphabet plus
//! the wildcard; a window commits to the coverage table as soon as its last
//! cell is set, and any doubly covered code prunes the branch.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::grids::{
    canonical_form, verify_upmatrix, verify_uptorus, GridMode, PartialGrid, WindowShape,
};
use crate::words::{Alphabet, Symbol};

#[derive(Debug, Clone, Copy, Serialize)]
pub struct SearchSpec {
    pub alphabet: u32,
    pub shape: WindowShape,
    pub rows: usize,
    pub cols: usize,
    pub mode: GridMode,
    pub dedup: bool,
    pub limit: Option<usize>,
    /// Prune when the committed coverage cannot be completed. On by default;
    /// disabling it must not change the solution set.
    pub prune: bool,
    /// Extra bound: remaining windows' maximum possible coverage must reach
    /// the remaining uncovered words. Off by default.
    pub capacity_prune: bool,
    /// Emit node counts to stderr during long runs.
    pub progress: bool,
}

impl SearchSpec {
    pub fn new(alphabet: u32, shape: WindowShape, rows: usize, cols: usize, mode: GridMode) -> Self {
        SearchSpec {
            alphabet,
            shape,
            rows,
            cols,
            mode,
            dedup: false,
            limit: None,
            prune: true,
            capacity_prune: false,
            progress: false,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Catalog {
    pub spec: SearchSpec,
    /// Solutions ordered by canonical form; deduped when requested.
    #[serde(skip)]
    pub solutions: Vec<PartialGrid>,
    pub raw_count: usize,
    pub canonical_count: usize,
    pub nodes_explored: u64,
}

struct Searcher {
    alphabet: u32,
    rows: usize,
    cols: usize,
    mode: GridMode,
    prune: bool,
    capacity_prune: bool,
    progress: bool,
    space: u64,
    window_cells: Vec<Vec<usize>>, // anchor index -> flat cell indices
    anchor_index: Vec<Vec<usize>>, // cell -> anchors completing there
    cells: Vec<Option<Symbol>>,
    counts: Vec<u16>,
    covered: u64,
    duplicates: u64,
    nodes: u64,
    solutions: Vec<PartialGrid>,
    limit: Option<usize>,
}

impl Searcher {
    fn new(spec: &SearchSpec) -> Result<Self> {
        let cells = spec.rows * spec.cols;
        let space = (spec.alphabet as u64)
            .checked_pow(spec.shape.cells() as u32)
            .filter(|&s| s <= 1 << 26)
            .ok_or_else(|| {
                Error::SpecTooLarge(format!(
                    "{}^{} window codes exceed the incremental table bound",
                    spec.alphabet,
                    spec.shape.cells()
                ))
            })?;
        if spec.mode == GridMode::Matrix && (spec.rows < spec.shape.w || spec.cols < spec.shape.l) {
            return Err(Error::SpecTooLarge(format!(
                "matrix {}x{} cannot hold a {}x{} window",
                spec.rows, spec.cols, spec.shape.w, spec.shape.l
            )));
        }
        let anchors: Vec<(usize, usize)> = match spec.mode {
            GridMode::Torus => (0..spec.rows)
                .flat_map(|r| (0..spec.cols).map(move |c| (r, c)))
                .collect(),
            GridMode::Matrix => (0..=spec.rows - spec.shape.w)
                .flat_map(|r| (0..=spec.cols - spec.shape.l).map(move |c| (r, c)))
                .collect(),
        };
        let mut window_cells = Vec::with_capacity(anchors.len());
        let mut anchor_index = vec![Vec::new(); cells];
        for (w, &(r, c)) in anchors.iter().enumerate() {
            let mut flat = Vec::with_capacity(spec.shape.cells());
            for y in 0..spec.shape.w {
                for x in 0..spec.shape.l {
                    let rr = (r + y) % spec.rows;
                    let cc = (c + x) % spec.cols;
                    flat.push(rr * spec.cols + cc);
                }
            }
            let last = *flat.iter().max().unwrap();
            anchor_index[last].push(w);
            window_cells.push(flat);
        }
        Ok(Searcher {
            alphabet: spec.alphabet,
            rows: spec.rows,
            cols: spec.cols,
            mode: spec.mode,
            prune: spec.prune,
            capacity_prune: spec.capacity_prune,
            progress: spec.progress,
            space,
            window_cells,
            anchor_index,
            cells: vec![None; cells],
            counts: vec![0; space as usize],
            covered: 0,
            duplicates: 0,
            nodes: 0,
            solutions: Vec::new(),
            limit: spec.limit,
        })
    }

    /// Commits all windows whose last cell is `cell`. Returns false (after
    /// rolling back) when pruning is on and a code is covered twice.
    fn commit(&mut self, cell: usize) -> bool {
        let windows = std::mem::take(&mut self.anchor_index[cell]);
        let mut committed = 0;
        let mut conflict = false;
        'outer: for &w in &windows {
            let codes = self.window_codes(w);
            for code in codes {
                let slot = &mut self.counts[code as usize];
                *slot += 1;
                if *slot == 1 {
                    self.covered += 1;
                } else if *slot == 2 {
                    self.duplicates += 1;
                    if self.prune {
                        // Roll back this partial window before unwinding.
                        self.rollback_window(w, code);
                        conflict = true;
                        committed += 1;
                        break 'outer;
                    }
                }
            }
            committed += 1;
        }
        if conflict {
            for &w in windows.iter().take(committed - 1) {
                self.uncommit_window(w);
            }
            self.anchor_index[cell] = windows;
            return false;
        }
        self.anchor_index[cell] = windows;
        true
    }

    fn rollback_window(&mut self, w: usize, through_code: u64) {
        for code in self.window_codes(w) {
            let slot = &mut self.counts[code as usize];
            *slot -= 1;
            if *slot == 0 {
                self.covered -= 1;
            } else if *slot == 1 {
                self.duplicates -= 1;
            }
            if code == through_code {
                break;
            }
        }
    }

    fn uncommit_window(&mut self, w: usize) {
        for code in self.window_codes(w) {
            let slot = &mut self.counts[code as usize];
            *slot -= 1;
            if *slot == 0 {
                self.covered -= 1;
            } else if *slot == 1 {
                self.duplicates -= 1;
            }
        }
    }

    fn uncommit(&mut self, cell: usize) {
        let windows = std::mem::take(&mut self.anchor_index[cell]);
        for &w in &windows {
            self.uncommit_window(w);
        }
        self.anchor_index[cell] = windows;
    }

    /// All total codes covered by window `w` under the current assignment,
    /// in odometer order. Deterministic, so commit and uncommit agree.
    fn window_codes(&self, w: usize) -> Vec<u64> {
        let a = self.alphabet as u64;
        let mut base = 0u64;
        let mut weights = Vec::new();
        for &cell in &self.window_cells[w] {
            base *= a;
            for wt in &mut weights {
                *wt *= a;
            }
            match self.cells[cell].expect("window committed before completion") {
                Symbol::Letter(v) => base += v as u64,
                Symbol::Diamond => weights.push(1u64),
            }
        }
        let mut codes = Vec::with_capacity(a.pow(weights.len() as u32) as usize);
        let mut digits = vec![0u64; weights.len()];
        let mut code = base;
        loop {
            codes.push(code);
            let mut i = 0;
            loop {
                if i == digits.len() {
                    return codes;
                }
                digits[i] += 1;
                code += weights[i];
                if digits[i] < a {
                    break;
                }
                code -= weights[i] * a;
                digits[i] = 0;
                i += 1;
            }
        }
    }

    /// Upper bound on the coverage the uncommitted windows can still add.
    fn remaining_capacity(&self, next_cell: usize) -> u64 {
        let a = self.alphabet as u64;
        let mut total: u64 = 0;
        for cell in next_cell..self.cells.len() {
            for &w in &self.anchor_index[cell] {
                let mut potential = 0u32;
                for &c in &self.window_cells[w] {
                    match self.cells[c] {
                        None | Some(Symbol::Diamond) => potential += 1,
                        Some(Symbol::Letter(_)) => {}
                    }
                }
                total = total.saturating_add(a.saturating_pow(potential));
                if total >= self.space {
                    return total;
                }
            }
        }
        total
    }

    fn assign(&mut self, cell: usize) {
        if cell == self.cells.len() {
            if self.covered == self.space && self.duplicates == 0 {
                let symbols: Vec<Symbol> = self.cells.iter().map(|c| c.unwrap()).collect();
                let grid = PartialGrid::new(
                    self.rows,
                    self.cols,
                    symbols,
                    Alphabet::new(self.alphabet).unwrap(),
                    self.mode,
                )
                .unwrap();
                self.solutions.push(grid);
            }
            return;
        }
        if self.limit.is_some_and(|l| self.solutions.len() >= l) {
            return;
        }
        for choice in 0..=self.alphabet {
            let symbol = if choice < self.alphabet {
                Symbol::Letter(choice as u8)
            } else {
                Symbol::Diamond
            };
            self.cells[cell] = Some(symbol);
            self.nodes += 1;
            if self.progress && self.nodes % (1 << 24) == 0 {
                eprintln!(
                    "search: {} nodes, {} solutions",
                    self.nodes,
                    self.solutions.len()
                );
            }
            if self.commit(cell) {
                let capacity_ok = !self.capacity_prune
                    || self.covered + self.remaining_capacity(cell + 1) >= self.space;
                if capacity_ok {
                    self.assign(cell + 1);
                }
                self.uncommit(cell);
            }
            self.cells[cell] = None;
        }
    }
}

/// Depth-first search for all grids whose windows cover every w x l matrix
/// exactly once. Every solution is re-verified through the grid verifier
/// before it enters the catalog.
pub fn search(spec: &SearchSpec) -> Result<Catalog> {
    let mut searcher = Searcher::new(spec)?;
    searcher.assign(0);
    finalize(spec, searcher.solutions, searcher.nodes, false)
}

/// As `search`, with trivial solutions (no diamonds, all diamonds, or a
/// degenerate window shape) filtered after verification, before counting
/// and deduplication.
pub fn search_nontrivial(spec: &SearchSpec) -> Result<Catalog> {
    let mut searcher = Searcher::new(spec)?;
    searcher.assign(0);
    finalize(spec, searcher.solutions, searcher.nodes, true)
}

fn finalize(
    spec: &SearchSpec,
    mut solutions: Vec<PartialGrid>,
    nodes: u64,
    nontrivial_only: bool,
) -> Result<Catalog> {
    for s in &solutions {
        let report = match spec.mode {
            GridMode::Matrix => verify_upmatrix(s, spec.shape)?,
            GridMode::Torus => verify_uptorus(s, spec.shape)?,
        };
        if !report.valid {
            return Err(Error::SpecTooLarge(
                "internal error: search produced a grid the verifier rejects".into(),
            ));
        }
    }
    if nontrivial_only {
        solutions.retain(|s| !is_trivial(s, spec.shape));
    }
    let raw_count = solutions.len();
    let mut keyed: Vec<(Vec<Symbol>, PartialGrid)> = solutions
        .drain(..)
        .map(|s| (canonical_form(&s, spec.shape).cells().to_vec(), s))
        .collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.cells().cmp(b.1.cells())));
    let mut canonical_count = 0;
    let mut prev: Option<&[Symbol]> = None;
    let mut out = Vec::new();
    for (key, sol) in &keyed {
        let fresh = prev != Some(key.as_slice());
        if fresh {
            canonical_count += 1;
        }
        if fresh || !spec.dedup {
            out.push(sol.clone());
        }
        prev = Some(key.as_slice());
    }
    Ok(Catalog {
        spec: *spec,
        solutions: out,
        raw_count,
        canonical_count,
        nodes_explored: nodes,
    })
}

fn is_trivial(grid: &PartialGrid, shape: WindowShape) -> bool {
    shape.w == 1
        || shape.l == 1
        || grid.diamond_count() == 0
        || grid.diamond_count() == grid.cells().len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grids::cross_shape_canonical_key;

    fn shape2x2() -> WindowShape {
        WindowShape::new(2, 2).unwrap()
    }

    #[test]
    fn finds_minimal_uptorus_class() {
        let mut spec = SearchSpec::new(2, shape2x2(), 3, 4, GridMode::Torus);
        spec.dedup = true;
        let catalog = search_nontrivial(&spec).unwrap();
        assert!(!catalog.solutions.is_empty());
        let minimal = PartialGrid::from_rows(
            &["*001", "1100", "1100"],
            Alphabet::new(2).unwrap(),
            GridMode::Torus,
        )
        .unwrap();
        let key = cross_shape_canonical_key(&minimal, shape2x2());
        assert!(catalog
            .solutions
            .iter()
            .any(|s| cross_shape_canonical_key(s, shape2x2()) == key));
        // Every nontrivial survivor respects the minimum dimensions.
        for s in &catalog.solutions {
            assert!(s.rows() >= 3 && s.cols() >= 3);
            assert!(s.diamond_count() >= 1);
        }
    }

    #[test]
    fn three_by_three_torus_has_no_solutions() {
        let spec = SearchSpec::new(2, shape2x2(), 3, 3, GridMode::Torus);
        let catalog = search_nontrivial(&spec).unwrap();
        assert!(catalog.solutions.is_empty());
    }

    #[test]
    fn matrix_search_contains_published_example() {
        let spec = SearchSpec::new(2, shape2x2(), 3, 5, GridMode::Matrix);
        let catalog = search(&spec).unwrap();
        assert!(!catalog.solutions.is_empty());
        let published = PartialGrid::from_rows(
            &["00110", "0*1*0", "10011"],
            Alphabet::new(2).unwrap(),
            GridMode::Matrix,
        )
        .unwrap();
        assert!(catalog.solutions.iter().any(|s| *s == published));
    }

    #[test]
    fn two_by_eleven_search_contains_published_example() {
        let spec = SearchSpec::new(2, shape2x2(), 2, 11, GridMode::Matrix);
        let catalog = search_nontrivial(&spec).unwrap();
        let published = PartialGrid::from_rows(
            &["00000101*1*", "0011001*011"],
            Alphabet::new(2).unwrap(),
            GridMode::Matrix,
        )
        .unwrap();
        assert!(catalog.solutions.iter().any(|s| *s == published));
    }

    #[test]
    fn two_by_two_matrix_only_all_diamond() {
        let spec = SearchSpec::new(2, shape2x2(), 2, 2, GridMode::Matrix);
        let catalog = search(&spec).unwrap();
        assert_eq!(catalog.raw_count, 1);
        assert!(catalog.solutions[0].cells().iter().all(|s| s.is_diamond()));
        let filtered = search_nontrivial(&spec).unwrap();
        assert!(filtered.solutions.is_empty());
    }

    #[test]
    fn completeness_against_naive_enumeration() {
        // 3x3 matrix over a=2, window 2x2: compare with checking all 3^9 grids.
        let spec = SearchSpec::new(2, shape2x2(), 3, 3, GridMode::Matrix);
        let catalog = search(&spec).unwrap();
        let mut naive = 0usize;
        let alphabet = Alphabet::new(2).unwrap();
        for mask in 0..3usize.pow(9) {
            let mut m = mask;
            let cells: Vec<Symbol> = (0..9)
                .map(|_| {
                    let v = m % 3;
                    m /= 3;
                    match v {
                        0 => Symbol::Letter(0),
                        1 => Symbol::Letter(1),
                        _ => Symbol::Diamond,
                    }
                })
                .collect();
            let grid = PartialGrid::new(3, 3, cells, alphabet, GridMode::Matrix).unwrap();
            if verify_upmatrix(&grid, shape2x2()).unwrap().valid {
                naive += 1;
            }
        }
        assert_eq!(catalog.raw_count, naive);
    }

    #[test]
    fn prune_safety() {
        let mut spec = SearchSpec::new(2, shape2x2(), 3, 4, GridMode::Torus);
        let pruned = search(&spec).unwrap();
        spec.prune = false;
        let unpruned = search(&spec).unwrap();
        assert_eq!(pruned.raw_count, unpruned.raw_count);
        assert_eq!(pruned.solutions, unpruned.solutions);
    }

    #[test]
    fn capacity_prune_safety() {
        let mut spec = SearchSpec::new(2, shape2x2(), 3, 4, GridMode::Torus);
        let plain = search(&spec).unwrap();
        spec.capacity_prune = true;
        let capped = search(&spec).unwrap();
        assert_eq!(plain.raw_count, capped.raw_count);
        assert_eq!(plain.solutions, capped.solutions);
    }
}
