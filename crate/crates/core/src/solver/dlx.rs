//! Dancing-links search over a 0/1 matrix whose columns are universe cells
//! and whose rows are pieces.

/// Why a search stopped early.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Stop {
    Budget,
    Cap,
}

pub(crate) struct Dlx {
    left: Vec<usize>,
    right: Vec<usize>,
    up: Vec<usize>,
    down: Vec<usize>,
    col: Vec<usize>,
    row: Vec<usize>,
    size: Vec<usize>,
    columns: usize,
}

const ROOT: usize = 0;

impl Dlx {
    /// `rows[i]` lists the (0-based) columns covered by row `i`.
    pub(crate) fn new(columns: usize, rows: &[Vec<usize>]) -> Self {
        let headers = columns + 1;
        let mut dlx = Dlx {
            left: (0..headers).map(|i| if i == 0 { columns } else { i - 1 }).collect(),
            right: (0..headers).map(|i| if i == columns { 0 } else { i + 1 }).collect(),
            up: (0..headers).collect(),
            down: (0..headers).collect(),
            col: (0..headers).collect(),
            row: vec![usize::MAX; headers],
            size: vec![0; headers],
            columns,
        };
        for (r, cells) in rows.iter().enumerate() {
            let mut first: Option<usize> = None;
            for &c in cells {
                let header = c + 1;
                let node = dlx.up.len();
                let last = dlx.up[header];
                dlx.up.push(last);
                dlx.down.push(header);
                dlx.down[last] = node;
                dlx.up[header] = node;
                dlx.col.push(header);
                dlx.row.push(r);
                dlx.size[header] += 1;
                match first {
                    None => {
                        dlx.left.push(node);
                        dlx.right.push(node);
                        first = Some(node);
                    }
                    Some(f) => {
                        let tail = dlx.left[f];
                        dlx.left.push(tail);
                        dlx.right.push(f);
                        dlx.right[tail] = node;
                        dlx.left[f] = node;
                    }
                }
            }
        }
        dlx
    }

    fn cover(&mut self, c: usize) {
        let (l, r) = (self.left[c], self.right[c]);
        self.right[l] = r;
        self.left[r] = l;
        let mut i = self.down[c];
        while i != c {
            let mut j = self.right[i];
            while j != i {
                let (u, d) = (self.up[j], self.down[j]);
                self.down[u] = d;
                self.up[d] = u;
                self.size[self.col[j]] -= 1;
                j = self.right[j];
            }
            i = self.down[i];
        }
    }

    fn uncover(&mut self, c: usize) {
        let mut i = self.up[c];
        while i != c {
            let mut j = self.left[i];
            while j != i {
                self.size[self.col[j]] += 1;
                let (u, d) = (self.up[j], self.down[j]);
                self.down[u] = j;
                self.up[d] = j;
                j = self.left[j];
            }
            i = self.up[i];
        }
        let (l, r) = (self.left[c], self.right[c]);
        self.right[l] = c;
        self.left[r] = c;
    }

    /// Minimum remaining candidates, ties broken by lowest column.
    fn choose(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        let mut c = self.right[ROOT];
        while c != ROOT {
            if best.is_none_or(|b| self.size[c] < self.size[b]) {
                best = Some(c);
                if self.size[c] == 0 {
                    break;
                }
            }
            c = self.right[c];
        }
        best
    }

    pub(crate) fn columns(&self) -> usize {
        self.columns
    }
}

pub(crate) struct Walk<'a, F: FnMut(&[usize]) -> bool> {
    pub(crate) budget: u64,
    pub(crate) nodes: u64,
    pub(crate) progress: Option<&'a mut dyn FnMut(u64)>,
    /// Called with the rows of each solution; returning `false` stops the walk.
    pub(crate) on_solution: F,
}

const PROGRESS_INTERVAL: u64 = 1 << 22;

impl<F: FnMut(&[usize]) -> bool> Walk<'_, F> {
    pub(crate) fn run(&mut self, dlx: &mut Dlx) -> Result<(), Stop> {
        let mut partial = Vec::new();
        self.search(dlx, &mut partial)
    }

    fn search(&mut self, dlx: &mut Dlx, partial: &mut Vec<usize>) -> Result<(), Stop> {
        if dlx.right[ROOT] == ROOT {
            return if (self.on_solution)(partial) { Ok(()) } else { Err(Stop::Cap) };
        }
        let Some(c) = dlx.choose() else { return Ok(()) };
        if dlx.size[c] == 0 {
            return Ok(());
        }
        dlx.cover(c);
        let mut r = dlx.down[c];
        let mut result = Ok(());
        while r != c {
            self.nodes += 1;
            if self.nodes > self.budget {
                result = Err(Stop::Budget);
                break;
            }
            if self.nodes.is_multiple_of(PROGRESS_INTERVAL) {
                if let Some(cb) = self.progress.as_mut() {
                    cb(self.nodes);
                }
            }
            partial.push(dlx.row[r]);
            let mut j = dlx.right[r];
            while j != r {
                dlx.cover(dlx.col[j]);
                j = dlx.right[j];
            }
            let inner = self.search(dlx, partial);
            let mut j = dlx.left[r];
            while j != r {
                dlx.uncover(dlx.col[j]);
                j = dlx.left[j];
            }
            partial.pop();
            if inner.is_err() {
                result = inner;
                break;
            }
            r = dlx.down[r];
        }
        dlx.uncover(c);
        result
    }
}
