//! Diagrams and their standard fillings: Young tableaux, standard key
//! tableaux (straight, skew and product shapes) and quasi-Yamanouchi
//! Kohnert tableaux.
//!
//! Rows are numbered from 1 at the bottom. Product shapes place the right
//! factor's columns after the left factor's, so every cell has a global
//! column used by the reading orders, while neighbours are always looked up
//! inside a single factor.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::foundations::{sort, Partition, StrongComposition, WeakComposition, WeakDescent};
use crate::permwords::{weak_descent_from_rows, RunDecomposition};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Shape {
    Young(Partition),
    SkewYoung { outer: Partition, inner: Partition },
    YoungProduct(Partition, Partition),
    Key(WeakComposition),
    SkewKey { outer: WeakComposition, inner: WeakComposition },
    KeyProduct(WeakComposition, WeakComposition),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub factor: u8,
    pub row: i32,
    pub col: u32,
}

impl Cell {
    fn shifted(self, dr: i32, dc: i32) -> Option<Cell> {
        let col = self.col as i64 + dc as i64;
        if col < 1 {
            return None;
        }
        Some(Cell { factor: self.factor, row: self.row + dr, col: col as u32 })
    }
}

fn young_rows(l: &Partition) -> Vec<u32> {
    l.parts().to_vec()
}

impl Shape {
    pub fn young(lambda: Partition) -> Shape {
        Shape::Young(lambda)
    }

    pub fn skew_young(outer: Partition, inner: Partition) -> Result<Shape> {
        if !outer.contains(&inner) {
            return Err(Error::Invalid(format!("{inner} is not contained in {outer}")));
        }
        Ok(Shape::SkewYoung { outer, inner })
    }

    pub fn skew_key(outer: WeakComposition, inner: WeakComposition) -> Result<Shape> {
        if !outer.contains(&inner) {
            return Err(Error::Invalid(format!("{inner} is not contained in {outer}")));
        }
        Ok(Shape::SkewKey { outer, inner })
    }

    pub fn key_product(a: WeakComposition, b: WeakComposition) -> Result<Shape> {
        if a.len() != b.len() {
            return Err(Error::LengthMismatch(a.len(), b.len()));
        }
        Ok(Shape::KeyProduct(a, b))
    }

    pub fn is_key(&self) -> bool {
        matches!(self, Shape::Key(_) | Shape::SkewKey { .. } | Shape::KeyProduct(..))
    }

    pub fn is_product(&self) -> bool {
        matches!(self, Shape::YoungProduct(..) | Shape::KeyProduct(..))
    }

    /// Row lengths per factor, bottom row first, with the number of skewed
    /// cells at the start of each row.
    fn factor_rows(&self) -> Vec<Vec<(u32, u32)>> {
        let plain = |v: &[u32]| v.iter().map(|&x| (x, 0)).collect::<Vec<_>>();
        match self {
            Shape::Young(l) => vec![plain(&young_rows(l))],
            Shape::SkewYoung { outer, inner } => {
                vec![outer.parts().iter().enumerate().map(|(i, &x)| (x, inner.part(i))).collect()]
            }
            Shape::YoungProduct(m, n) => vec![plain(m.parts()), plain(n.parts())],
            Shape::Key(a) => vec![plain(a.parts())],
            Shape::SkewKey { outer, inner } => {
                vec![outer.parts().iter().zip(inner.parts()).map(|(&d, &a)| (d, a)).collect()]
            }
            Shape::KeyProduct(a, b) => vec![plain(a.parts()), plain(b.parts())],
        }
    }

    /// Number of rows carried by weak descent compositions.
    pub fn height(&self) -> usize {
        self.factor_rows().iter().map(|f| f.len()).max().unwrap_or(0)
    }

    pub fn col_offset(&self, factor: u8) -> u32 {
        if factor == 0 {
            return 0;
        }
        self.factor_rows()[0].iter().map(|r| r.0).max().unwrap_or(0)
    }

    pub fn global_col(&self, c: &Cell) -> u32 {
        c.col + self.col_offset(c.factor)
    }

    /// All cells with a flag for skewed cells, sorted by global column and
    /// then by row.
    pub fn cells(&self) -> Vec<(Cell, bool)> {
        let mut out = Vec::new();
        for (f, rows) in self.factor_rows().iter().enumerate() {
            for (r, &(len, skew)) in rows.iter().enumerate() {
                for c in 1..=len {
                    out.push((Cell { factor: f as u8, row: r as i32 + 1, col: c }, c <= skew));
                }
            }
        }
        out.sort_by_key(|(c, _)| (self.global_col(c), c.row));
        out
    }

    /// Number of cells that receive labels.
    pub fn size(&self) -> usize {
        self.cells().iter().filter(|(_, s)| !s).count()
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shape::Young(l) => write!(f, "{l}"),
            Shape::SkewYoung { outer, inner } => write!(f, "{outer}/{inner}"),
            Shape::YoungProduct(m, n) => write!(f, "{m}x{n}"),
            Shape::Key(a) => write!(f, "{a}"),
            Shape::SkewKey { outer, inner } => write!(f, "{outer}/{inner}"),
            Shape::KeyProduct(a, b) => write!(f, "{a}x{b}"),
        }
    }
}

/// A bijective labeling of the non-skewed cells of a shape by `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Filling {
    shape: Shape,
    cells: Vec<Cell>,
    labels: Vec<Option<u32>>,
}

impl Filling {
    /// Builds a filling from a labeling function; skewed cells get `None`.
    pub fn from_fn<F: FnMut(&Cell) -> u32>(shape: Shape, mut label: F) -> Result<Filling> {
        let all = shape.cells();
        let mut cells = Vec::with_capacity(all.len());
        let mut labels = Vec::with_capacity(all.len());
        for (c, skew) in all {
            cells.push(c);
            labels.push(if skew { None } else { Some(label(&c)) });
        }
        let f = Filling { shape, cells, labels };
        f.check_bijective()?;
        Ok(f)
    }

    /// Parses rows listed top first and separated by `/`; factors of a
    /// product are separated by `|` and skewed cells are written `##`.
    /// Key shapes list every row down to row 1, including empty ones.
    pub fn parse(shape: Shape, text: &str) -> Result<Filling> {
        let rows: Vec<&str> = text.split('/').collect();
        let nfactors = if shape.is_product() { 2 } else { 1 };
        let height = if shape.is_key() { shape.height() } else { rows.len() };
        if rows.len() != height {
            return Err(Error::Parse(format!("expected {height} rows in {text:?}")));
        }
        let mut given: BTreeMap<Cell, Option<u32>> = BTreeMap::new();
        for (k, row) in rows.iter().enumerate() {
            let r = (height - k) as i32;
            let parts: Vec<&str> = if nfactors == 2 { row.split('|').collect() } else { vec![row] };
            if parts.len() > nfactors {
                return Err(Error::Parse(format!("too many factors in row {row:?}")));
            }
            for (f, part) in parts.iter().enumerate() {
                for (c, tok) in part.split_whitespace().enumerate() {
                    let v = if tok == "##" {
                        None
                    } else {
                        Some(tok.parse::<u32>().map_err(|_| Error::Parse(format!("bad entry {tok:?}")))?)
                    };
                    given.insert(Cell { factor: f as u8, row: r, col: c as u32 + 1 }, v);
                }
            }
        }
        let all = shape.cells();
        if all.len() != given.len() {
            return Err(Error::Parse(format!("filling {text:?} does not match shape {shape}")));
        }
        let mut cells = Vec::new();
        let mut labels = Vec::new();
        for (c, skew) in all {
            match given.get(&c) {
                Some(v) if v.is_none() == skew => {
                    cells.push(c);
                    labels.push(*v);
                }
                _ => return Err(Error::Parse(format!("filling {text:?} does not match shape {shape}"))),
            }
        }
        let f = Filling { shape, cells, labels };
        f.check_bijective()?;
        Ok(f)
    }

    fn check_bijective(&self) -> Result<()> {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        for v in self.labels.iter().flatten() {
            let v = *v as usize;
            if v == 0 || v > n || seen[v] {
                return Err(Error::Invalid(format!("labels are not a bijection onto 1..{n}")));
            }
            seen[v] = true;
        }
        Ok(())
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.labels.iter().filter(|l| l.is_some()).count()
    }

    /// Cells in column reading order for key shapes (columns left to right,
    /// each bottom to top), with their labels.
    pub fn entries(&self) -> impl Iterator<Item = (Cell, Option<u32>)> + '_ {
        self.cells.iter().copied().zip(self.labels.iter().copied())
    }

    fn index(&self, c: &Cell) -> Option<usize> {
        let key = (self.shape.global_col(c), c.row);
        self.cells
            .binary_search_by_key(&key, |x| (self.shape.global_col(x), x.row))
            .ok()
            .filter(|&k| self.cells[k].factor == c.factor)
    }

    /// `None` outside the shape, `Some(None)` on a skewed cell.
    pub fn at(&self, c: &Cell) -> Option<Option<u32>> {
        self.index(c).map(|k| self.labels[k])
    }

    /// Cell index of each entry; slot 0 unused.
    fn positions(&self) -> Vec<usize> {
        let mut pos = vec![usize::MAX; self.n() + 1];
        for (k, l) in self.labels.iter().enumerate() {
            if let Some(v) = l {
                pos[*v as usize] = k;
            }
        }
        pos
    }

    pub fn cell_of(&self, v: u32) -> Option<Cell> {
        self.labels.iter().position(|l| *l == Some(v)).map(|k| self.cells[k])
    }

    fn gcol(&self, k: usize) -> u32 {
        self.shape.global_col(&self.cells[k])
    }

    /// Descents `i` in `1..n`: for Young shapes `i+1` lies weakly left of
    /// `i`; for key shapes `i+1` lies weakly right of `i`.
    pub fn descent_set(&self) -> Vec<u32> {
        let pos = self.positions();
        let n = self.n();
        (1..n)
            .filter(|&i| {
                let (a, b) = (self.gcol(pos[i + 1]), self.gcol(pos[i]));
                if self.shape.is_key() {
                    a >= b
                } else {
                    a <= b
                }
            })
            .map(|i| i as u32)
            .collect()
    }

    pub fn descent_composition(&self) -> StrongComposition {
        StrongComposition::from_descent_set(self.n() as u32, &self.descent_set())
    }

    /// The word `n ⋯ 1` broken at descents, largest block first.
    pub fn run_decomposition(&self) -> RunDecomposition {
        let des = self.descent_set();
        let mut blocks: Vec<Vec<u32>> = Vec::new();
        for v in (1..=self.n() as u32).rev() {
            match blocks.last_mut() {
                Some(b) if !des.contains(&v) => b.push(v),
                _ => blocks.push(vec![v]),
            }
        }
        RunDecomposition { blocks }
    }

    /// Row assigned to each entry (index `v - 1`) by the weak descent rule:
    /// each block sits at the lowest row among its entries, or just below the
    /// previous block if that is lower. Rows may be nonpositive.
    pub fn entry_rows(&self) -> Result<Vec<i64>> {
        if !self.shape.is_key() {
            return Err(Error::Invalid("weak descents are defined for key shapes".into()));
        }
        Ok(self.positional_rows())
    }

    /// Rows on a product shape that follow the shuffle of the factors: each
    /// factor first gets its own rows, then an entry of the left factor in
    /// row `r` behaves like the letter `2r - 1` and one of the right factor
    /// like `2r`, runs breaking wherever the letters decrease.
    pub fn shuffle_entry_rows(&self) -> Result<Vec<i64>> {
        if !matches!(self.shape, Shape::KeyProduct(..)) {
            return Err(Error::Invalid("shuffle rows are defined for key products".into()));
        }
        self.product_rows()
    }

    pub fn shuffle_weak_descent(&self) -> Result<WeakDescent> {
        weak_descent_from_rows(&self.shuffle_entry_rows()?, self.shape.height())
    }

    fn positional_rows(&self) -> Vec<i64> {
        let pos = self.positions();
        let row = |v: &u32| self.cells[pos[*v as usize]].row as i64;
        let blocks: Vec<Vec<i64>> =
            self.run_decomposition().blocks.iter().map(|b| b.iter().map(row).collect()).collect();
        let order: Vec<u32> = (1..=self.n() as u32).rev().collect();
        chain_rows(&blocks, &order, self.n())
    }

    fn product_rows(&self) -> Result<Vec<i64>> {
        let n = self.n();
        let pos = self.positions();
        let mut letter = vec![0i64; n + 1];
        for f in 0..2u8 {
            let part = self.factor(f)?;
            let rows = part.positional_rows();
            // the k-th smallest entry of the factor is its local entry k
            let mut globals: Vec<u32> = (1..=n as u32).filter(|&v| self.cells[pos[v as usize]].factor == f).collect();
            globals.sort_unstable();
            for (k, v) in globals.iter().enumerate() {
                letter[*v as usize] = 2 * rows[k] - (f == 0) as i64;
            }
        }
        let order: Vec<u32> = (1..=n as u32).rev().collect();
        let mut blocks: Vec<Vec<i64>> = Vec::new();
        let mut prev: Option<i64> = None;
        for &v in &order {
            let l = letter[v as usize];
            match (blocks.last_mut(), prev) {
                (Some(b), Some(p)) if p <= l => b.push(l),
                _ => blocks.push(vec![l]),
            }
            prev = Some(l);
        }
        let rows: Vec<Vec<i64>> = blocks.iter().map(|b| b.iter().map(|l| (l + 1).div_euclid(2)).collect()).collect();
        Ok(chain_rows(&rows, &order, n))
    }

    /// One factor of a product filling as a straight key filling, entries
    /// standardized.
    pub fn factor(&self, f: u8) -> Result<Filling> {
        let shape = match &self.shape {
            Shape::KeyProduct(a, b) => Shape::Key(if f == 0 { a.clone() } else { b.clone() }),
            Shape::YoungProduct(m, n) => Shape::Young(if f == 0 { m.clone() } else { n.clone() }),
            _ => return Err(Error::Invalid("not a product shape".into())),
        };
        let mut mine: Vec<u32> = self.entries().filter(|(c, _)| c.factor == f).filter_map(|(_, l)| l).collect();
        mine.sort_unstable();
        Filling::from_fn(shape, |c| {
            let v = self.at(&Cell { factor: f, ..*c }).flatten().expect("cell of the factor");
            mine.binary_search(&v).expect("entry of the factor") as u32 + 1
        })
    }

    /// Weak descent composition of a key-shaped filling.
    pub fn weak_descent(&self) -> Result<WeakDescent> {
        weak_descent_from_rows(&self.entry_rows()?, self.shape.height())
    }

    fn with_labels(&self, labels: Vec<Option<u32>>) -> Filling {
        Filling { shape: self.shape.clone(), cells: self.cells.clone(), labels }
    }

    /// Applies a relabeling of entries.
    pub fn relabel<F: Fn(u32) -> u32>(&self, f: F) -> Filling {
        self.with_labels(self.labels.iter().map(|l| l.map(&f)).collect())
    }

    fn swap_values(&self, x: u32, y: u32) -> Filling {
        self.relabel(|v| {
            if v == x {
                y
            } else if v == y {
                x
            } else {
                v
            }
        })
    }

    /// Position of each entry in the Young column reading word (columns left
    /// to right, each read top to bottom).
    fn young_reading_rank(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.cells.len()).filter(|&k| self.labels[k].is_some()).collect();
        order.sort_by_key(|&k| (self.gcol(k), -self.cells[k].row));
        let mut rank = vec![0; self.n() + 1];
        for (r, &k) in order.iter().enumerate() {
            rank[self.labels[k].unwrap() as usize] = r;
        }
        rank
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i < 2 || i >= self.n() {
            return Err(Error::IndexRange { index: i, size: self.n() });
        }
        Ok(())
    }

    /// Haiman's involution on Young-shaped fillings: swap `i` with `i±1`
    /// when `i∓1` lies between them in the column reading word.
    pub fn haiman_d(&self, i: usize) -> Result<Filling> {
        self.check_index(i)?;
        let rank = self.young_reading_rank();
        let (p0, p1, p2) = (rank[i - 1], rank[i], rank[i + 1]);
        let between = |x: usize, a: usize, b: usize| (a < x && x < b) || (b < x && x < a);
        let i = i as u32;
        Ok(if between(p1, p0, p2) {
            self.clone()
        } else if between(p0, p1, p2) {
            self.swap_values(i, i + 1)
        } else {
            self.swap_values(i - 1, i)
        })
    }

    /// The involution `d_i` on key-shaped fillings.
    pub fn skt_d(&self, i: usize) -> Result<Filling> {
        self.check_index(i)?;
        let pos = self.positions();
        let mut trio = [pos[i - 1], pos[i], pos[i + 1]];
        trio.sort_unstable();
        let [b, c, d] = trio;
        let cv = self.labels[c].unwrap() as usize;
        let row = |k: usize| (self.cells[k].factor, self.cells[k].row);
        let i32_ = i as u32;
        if cv == i {
            return Ok(self.clone());
        }
        if row(b) == row(d) && row(c) != row(b) {
            // braid: cycle i-1, i, i+1 so that the lone cell's value moves
            // into the row shared by the other two
            let map: [(u32, u32); 3] = if cv == i + 1 {
                [(i32_ - 1, i32_), (i32_, i32_ + 1), (i32_ + 1, i32_ - 1)]
            } else {
                [(i32_ + 1, i32_), (i32_, i32_ - 1), (i32_ - 1, i32_ + 1)]
            };
            return Ok(self.relabel(|v| map.iter().find(|m| m.0 == v).map(|m| m.1).unwrap_or(v)));
        }
        Ok(if cv == i + 1 { self.swap_values(i32_ - 1, i32_) } else { self.swap_values(i32_, i32_ + 1) })
    }

    /// Young conditions: rows increase rightward and columns upward, skewed
    /// cells counting as smaller than every entry.
    pub fn is_standard_young(&self) -> bool {
        if self.shape.is_key() {
            return false;
        }
        let val = |l: Option<u32>| l.map(|v| v as i64).unwrap_or(-1);
        self.entries().all(|(c, l)| {
            let v = val(l);
            let left = c.shifted(0, -1).and_then(|x| self.at(&x));
            let below = c.shifted(-1, 0).and_then(|x| self.at(&x));
            left.map(|x| val(x) < v || l.is_none()).unwrap_or(true)
                && below.map(|x| val(x) < v || l.is_none()).unwrap_or(true)
        })
    }

    /// Key conditions: rows decrease rightward, and whenever `i` sits above
    /// `k > i` in a column, the cell right of `k` holds some `j > i`, or (skew
    /// shapes) the cell left of `k` is skewed and the cell left of `i` holds
    /// some `j < k`.
    pub fn is_standard_key(&self) -> bool {
        if !self.shape.is_key() {
            return false;
        }
        for (c, l) in self.entries() {
            let Some(v) = l else { continue };
            if let Some(Some(Some(w))) = c.shifted(0, -1).map(|x| self.at(&x)) {
                if w < v {
                    return false;
                }
            }
        }
        for (ci, li) in self.entries() {
            let Some(i) = li else { continue };
            for (ck, lk) in self.entries() {
                let Some(k) = lk else { continue };
                if ck.factor != ci.factor || ck.col != ci.col || ck.row >= ci.row || k <= i {
                    continue;
                }
                let right_ok = matches!(ck.shifted(0, 1).and_then(|x| self.at(&x)), Some(Some(j)) if j > i);
                let skew_ok = matches!(ck.shifted(0, -1).and_then(|x| self.at(&x)), Some(None))
                    && matches!(ci.shifted(0, -1).and_then(|x| self.at(&x)), Some(Some(j)) if j < k);
                if !(right_ok || skew_ok) {
                    return false;
                }
            }
        }
        true
    }

    /// Rows top first; each row lists `(column, label)` inside each factor.
    fn rows_by_factor(&self) -> Vec<Vec<Vec<Option<u32>>>> {
        let nf = if self.shape.is_product() { 2 } else { 1 };
        let height = self.shape.height();
        let mut out = vec![vec![Vec::new(); nf]; height];
        let mut sorted: Vec<(Cell, Option<u32>)> = self.entries().collect();
        sorted.sort_by_key(|(c, _)| (c.factor, c.row, c.col));
        for (c, l) in sorted {
            out[height - c.row as usize][c.factor as usize].push(l);
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let rows = self.rows_by_factor();
        let factor = |f: usize| -> Value { Value::Array(rows.iter().map(|r| json!(r[f])).collect()) };
        if self.shape.is_product() {
            json!({"left": {"rows": factor(0)}, "right": {"rows": factor(1)}})
        } else {
            json!({ "rows": factor(0) })
        }
    }
}

/// Rows of the blocks (given as the rows of their entries, in `order`),
/// chained so that each block is strictly below the previous one, spread
/// back onto entries.
fn chain_rows(blocks: &[Vec<i64>], order: &[u32], n: usize) -> Vec<i64> {
    let mut out = vec![0i64; n];
    let mut above: Option<i64> = None;
    let mut k = 0;
    for b in blocks {
        let low = *b.iter().min().expect("blocks are nonempty");
        let t = above.map_or(low, |above| low.min(above - 1));
        for _ in b {
            out[order[k] as usize - 1] = t;
            k += 1;
        }
        above = Some(t);
    }
    out
}

impl fmt::Display for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = self.rows_by_factor();
        let skew = self.labels.iter().any(|l| l.is_none());
        let w = self.n().to_string().len().max(if skew { 2 } else { 1 });
        let cell = |l: &Option<u32>| match l {
            Some(v) => format!("{v:>w$}"),
            None => "#".repeat(w),
        };
        let left_width = self.shape.col_offset(1) as usize;
        let mut lines = Vec::new();
        for r in &rows {
            let mut s: String = r[0].iter().map(cell).collect::<Vec<_>>().join(" ");
            if r.len() > 1 {
                let pad = if left_width == 0 { 0 } else { left_width * (w + 1) - 1 };
                s = format!("{s:<pad$} | {}", r[1].iter().map(cell).collect::<Vec<_>>().join(" "));
            }
            lines.push(s.trim_end().to_string());
        }
        write!(f, "{}", lines.join("\n"))
    }
}

/// Every standard filling of a shape: Young-type shapes get standard Young
/// tableaux, key-type shapes get standard key tableaux. Sorted.
pub fn enumerate(shape: &Shape) -> Vec<Filling> {
    let all = shape.cells();
    let cells: Vec<Cell> = all.iter().map(|x| x.0).collect();
    let skew: Vec<bool> = all.iter().map(|x| x.1).collect();
    let n = skew.iter().filter(|s| !**s).count();
    let index: BTreeMap<Cell, usize> = cells.iter().enumerate().map(|(k, c)| (*c, k)).collect();
    let mut labels: Vec<Option<u32>> = vec![None; cells.len()];
    let mut filled: Vec<bool> = skew.clone();
    let mut out = Vec::new();
    let ctx = EnumCtx { cells: &cells, skew: &skew, index: &index, n };
    if shape.is_key() {
        ctx.key_rec(n as u32, &mut labels, &mut filled, &mut |l| {
            out.push(Filling { shape: shape.clone(), cells: cells.clone(), labels: l.to_vec() })
        });
    } else {
        ctx.young_rec(1, &mut labels, &mut filled, &mut |l| {
            out.push(Filling { shape: shape.clone(), cells: cells.clone(), labels: l.to_vec() })
        });
    }
    out.sort();
    out
}

struct EnumCtx<'a> {
    cells: &'a [Cell],
    skew: &'a [bool],
    index: &'a BTreeMap<Cell, usize>,
    n: usize,
}

impl EnumCtx<'_> {
    fn idx(&self, c: Option<Cell>) -> Option<usize> {
        c.and_then(|c| self.index.get(&c).copied())
    }

    fn young_rec<F: FnMut(&[Option<u32>])>(
        &self,
        v: u32,
        labels: &mut [Option<u32>],
        filled: &mut [bool],
        emit: &mut F,
    ) {
        if v as usize > self.n {
            emit(labels);
            return;
        }
        for k in 0..self.cells.len() {
            if filled[k] {
                continue;
            }
            let c = self.cells[k];
            let ok = |d: Option<Cell>| self.idx(d).map(|j| filled[j]).unwrap_or(true);
            if ok(c.shifted(0, -1)) && ok(c.shifted(-1, 0)) {
                filled[k] = true;
                labels[k] = Some(v);
                self.young_rec(v + 1, labels, filled, emit);
                labels[k] = None;
                filled[k] = false;
            }
        }
    }

    fn key_rec<F: FnMut(&[Option<u32>])>(&self, v: u32, labels: &mut [Option<u32>], filled: &mut [bool], emit: &mut F) {
        if v == 0 {
            emit(labels);
            return;
        }
        for k in 0..self.cells.len() {
            if filled[k] {
                continue;
            }
            let c = self.cells[k];
            // rows fill left to right with decreasing entries
            if let Some(j) = self.idx(c.shifted(0, -1)) {
                if !filled[j] {
                    continue;
                }
            }
            let left_of_new = self.idx(c.shifted(0, -1)).and_then(|j| labels[j]);
            let ok = self.cells.iter().enumerate().all(|(j, ck)| {
                let Some(kv) = labels[j] else { return true };
                if ck.factor != c.factor || ck.col != c.col || ck.row >= c.row {
                    return true;
                }
                let right = self.idx(ck.shifted(0, 1)).map(|r| labels[r].is_some()).unwrap_or(false);
                let skew_left = self.idx(ck.shifted(0, -1)).map(|r| self.skew[r]).unwrap_or(false);
                right || (skew_left && left_of_new.map(|x| x < kv).unwrap_or(false))
            });
            if ok {
                filled[k] = true;
                labels[k] = Some(v);
                self.key_rec(v - 1, labels, filled, emit);
                labels[k] = None;
                filled[k] = false;
            }
        }
    }
}

pub fn enumerate_syt(lambda: &Partition) -> Vec<Filling> {
    enumerate(&Shape::Young(lambda.clone()))
}

pub fn enumerate_skt(a: &WeakComposition) -> Vec<Filling> {
    enumerate(&Shape::Key(a.clone()))
}

pub fn enumerate_skew_skt(d: &WeakComposition, a: &WeakComposition) -> Result<Vec<Filling>> {
    Ok(enumerate(&Shape::skew_key(d.clone(), a.clone())?))
}

pub fn enumerate_product_skt(a: &WeakComposition, b: &WeakComposition) -> Result<Vec<Filling>> {
    Ok(enumerate(&Shape::key_product(a.clone(), b.clone())?))
}

/// Rows filled consecutively from the bottom, left to right.
pub fn super_standard(lambda: &Partition) -> Filling {
    let mut start = vec![0u32; lambda.len() + 1];
    for r in 0..lambda.len() {
        start[r + 1] = start[r] + lambda.part(r);
    }
    Filling::from_fn(Shape::Young(lambda.clone()), |c| start[c.row as usize - 1] + c.col)
        .expect("super-standard filling is bijective")
}

/// The key tableau whose reverse row reading word is the identity.
pub fn yamanouchi_key(a: &WeakComposition) -> Filling {
    let mut start = vec![0u32; a.len() + 1];
    for r in 0..a.len() {
        start[r + 1] = start[r] + a.parts()[r];
    }
    Filling::from_fn(Shape::Key(a.clone()), |c| {
        let r = c.row as usize - 1;
        start[r] + a.parts()[r] - c.col + 1
    })
    .expect("yamanouchi filling is bijective")
}

/// Lets the cells of a key-shaped filling fall in each column, sorts each
/// column with its largest entry lowest, and complements `i ↦ n + 1 - i`.
/// Skewed cells fall to the bottom.
pub fn phi_flatten(t: &Filling) -> Result<Filling> {
    let target = match t.shape() {
        Shape::Key(a) => Shape::Young(sort(a)),
        Shape::SkewKey { outer, inner } => Shape::skew_young(sort(outer), sort(inner))?,
        Shape::KeyProduct(a, b) => Shape::YoungProduct(sort(a), sort(b)),
        _ => return Err(Error::Invalid("flattening needs a key shape".into())),
    };
    let n = t.n() as u32;
    let mut columns: BTreeMap<(u8, u32), Vec<u32>> = BTreeMap::new();
    let mut skews: BTreeMap<(u8, u32), i32> = BTreeMap::new();
    for (c, l) in t.entries() {
        match l {
            Some(v) => columns.entry((c.factor, c.col)).or_default().push(v),
            None => *skews.entry((c.factor, c.col)).or_default() += 1,
        }
    }
    for col in columns.values_mut() {
        col.sort_unstable_by(|x, y| y.cmp(x));
    }
    let out = Filling::from_fn(target, |c| {
        let base = skews.get(&(c.factor, c.col)).copied().unwrap_or(0);
        let v = columns[&(c.factor, c.col)][(c.row - base - 1) as usize];
        n + 1 - v
    })?;
    if !out.is_standard_young() {
        return Err(Error::Inconsistent(format!("flattening produced a non-standard tableau:\n{out}")));
    }
    Ok(out)
}

/// A Kohnert tableau: cells with row, column and entry. Rows may be
/// nonpositive, in which case the diagram is virtual.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KohnertTableau {
    shape: WeakComposition,
    /// `(row, col, entry)` sorted by row then column.
    cells: Vec<(i32, u32, u32)>,
}

impl KohnertTableau {
    pub fn new(shape: WeakComposition, mut cells: Vec<(i32, u32, u32)>) -> Self {
        cells.sort_unstable();
        KohnertTableau { shape, cells }
    }

    pub fn shape(&self) -> &WeakComposition {
        &self.shape
    }

    pub fn cells(&self) -> &[(i32, u32, u32)] {
        &self.cells
    }

    pub fn weight(&self) -> WeakDescent {
        if self.cells.iter().any(|c| c.0 <= 0) {
            return WeakDescent::Virtual;
        }
        let mut parts = vec![0u32; self.shape.len()];
        for c in &self.cells {
            parts[c.0 as usize - 1] += 1;
        }
        WeakDescent::Weak(WeakComposition::new(parts))
    }

    /// Conditions (i)–(iv) for a Kohnert tableau of its shape.
    pub fn is_kohnert(&self) -> bool {
        let a = self.shape.parts();
        let mut seen = std::collections::HashSet::new();
        for &(r, c, v) in &self.cells {
            if v == 0 || v as usize > a.len() || c == 0 || c > a[v as usize - 1] || !seen.insert((r, c)) {
                return false;
            }
            if r > v as i32 {
                return false;
            }
        }
        let count = |v: u32| self.cells.iter().filter(|x| x.2 == v).count();
        for (k, &ak) in a.iter().enumerate() {
            let v = k as u32 + 1;
            if count(v) != ak as usize {
                return false;
            }
            let mut rows: Vec<(u32, i32)> = self.cells.iter().filter(|x| x.2 == v).map(|x| (x.1, x.0)).collect();
            rows.sort_unstable();
            if rows.iter().enumerate().any(|(j, x)| x.0 != j as u32 + 1) {
                return false;
            }
            if rows.windows(2).any(|w| w[1].1 > w[0].1) {
                return false;
            }
        }
        for &(ri, ci, i) in &self.cells {
            for &(rj, cj, j) in &self.cells {
                if cj == ci && i < j && ri > rj {
                    let ok = self.cells.iter().any(|&(r, c, v)| v == i && c > cj && r > rj);
                    if !ok {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Each nonempty row `r` holds an entry `r` or has a cell weakly left of
    /// some cell in row `r + 1`.
    pub fn is_quasi_yamanouchi(&self) -> bool {
        let mut rows: BTreeMap<i32, Vec<(u32, u32)>> = BTreeMap::new();
        for &(r, c, v) in &self.cells {
            rows.entry(r).or_default().push((c, v));
        }
        rows.iter().all(|(&r, cells)| {
            cells.iter().any(|&(_, v)| v as i32 == r)
                || rows.get(&(r + 1)).is_some_and(|above| {
                    let leftmost = cells.iter().map(|x| x.0).min().unwrap();
                    above.iter().any(|x| x.0 >= leftmost)
                })
        })
    }
}

impl fmt::Display for KohnertTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let top = self.shape.len() as i32;
        let bottom = self.cells.iter().map(|c| c.0).min().unwrap_or(1).min(1);
        let width = self.cells.iter().map(|c| c.1).max().unwrap_or(0);
        let mut lines = Vec::new();
        for r in (bottom..=top).rev() {
            if r == 0 {
                lines.push("-".repeat((width as usize * 2).saturating_sub(1).max(1)));
            }
            let row: Vec<String> = (1..=width)
                .map(|c| {
                    self.cells
                        .iter()
                        .find(|x| x.0 == r && x.1 == c)
                        .map(|x| x.2.to_string())
                        .unwrap_or_else(|| ".".into())
                })
                .collect();
            lines.push(row.join(" ").trim_end_matches(['.', ' ']).to_string());
        }
        write!(f, "{}", lines.join("\n"))
    }
}

/// Quasi-Yamanouchi Kohnert tableaux of shape `a`, sorted.
pub fn enumerate_qkt(a: &WeakComposition) -> Vec<KohnertTableau> {
    let lo = 1 - a.size() as i32;
    let parts = a.parts().to_vec();
    let mut out = Vec::new();
    let mut cells: Vec<(i32, u32, u32)> = Vec::new();
    let mut used = std::collections::HashSet::new();

    #[allow(clippy::too_many_arguments)]
    fn choose_rows(
        v: usize,
        col: u32,
        max_row: i32,
        lo: i32,
        parts: &[u32],
        cells: &mut Vec<(i32, u32, u32)>,
        used: &mut std::collections::HashSet<(i32, u32)>,
        shape: &WeakComposition,
        out: &mut Vec<KohnertTableau>,
    ) {
        if v == parts.len() {
            let t = KohnertTableau::new(shape.clone(), cells.clone());
            if t.is_kohnert() && t.is_quasi_yamanouchi() {
                out.push(t);
            }
            return;
        }
        if col > parts[v] {
            let next_max = v as i32 + 2;
            choose_rows(v + 1, 1, next_max, lo, parts, cells, used, shape, out);
            return;
        }
        for r in (lo..=max_row).rev() {
            if used.contains(&(r, col)) {
                continue;
            }
            used.insert((r, col));
            cells.push((r, col, v as u32 + 1));
            choose_rows(v, col + 1, r, lo, parts, cells, used, shape, out);
            cells.pop();
            used.remove(&(r, col));
        }
    }

    if parts.is_empty() {
        return vec![KohnertTableau::new(a.clone(), Vec::new())];
    }
    choose_rows(0, 1, 1, lo, &parts, &mut cells, &mut used, a, &mut out);
    out.sort();
    out
}

/// Relabels the cells of `D` along rows, top row first and left to right,
/// with `n, n-1, …, 1`, and returns each cell to the row named by its
/// original entry.
pub fn ascend(d: &KohnertTableau) -> Result<Filling> {
    let mut order: Vec<&(i32, u32, u32)> = d.cells.iter().collect();
    order.sort_by_key(|&&(r, c, _)| (-r, c));
    let n = order.len() as u32;
    let mut label: BTreeMap<(i32, u32), u32> = BTreeMap::new();
    for (k, &&(_, c, v)) in order.iter().enumerate() {
        if label.insert((v as i32, c), n - k as u32).is_some() {
            return Err(Error::Invalid("two cells return to the same place".into()));
        }
    }
    Filling::from_fn(Shape::Key(d.shape.clone()), |c| label.get(&(c.row, c.col)).copied().unwrap_or(0))
}

/// Pushes cells down minimally until reading rows bottom to top, each
/// right to left, gives `1, 2, …, n`; then labels cells by original row.
pub fn descend(t: &Filling) -> Result<KohnertTableau> {
    let Shape::Key(a) = t.shape() else {
        return Err(Error::Invalid("descend needs a straight key shape".into()));
    };
    let n = t.n() as u32;
    let mut cells = Vec::with_capacity(n as usize);
    let mut prev: Option<(i32, u32)> = None;
    for v in (1..=n).rev() {
        let c = t.cell_of(v).expect("entry present");
        let r = match prev {
            None => c.row,
            Some((rp, cp)) => {
                let bound = if c.col > cp { rp } else { rp - 1 };
                c.row.min(bound)
            }
        };
        cells.push((r, c.col, c.row as u32));
        prev = Some((r, c.col));
    }
    Ok(KohnertTableau::new(a.clone(), cells))
}
