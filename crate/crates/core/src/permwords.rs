//! Permutations in one-line notation, reduced words and their descent
//! statistics.
//!
//! A word `(ρ_1, …, ρ_k)` is stored in printed order. It multiplies to the
//! permutation obtained from the identity by swapping positions `ρ_k`,
//! `ρ_{k-1}`, …, `ρ_1` in that order.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::foundations::{parse_parts, Partition, StrongComposition, WeakComposition, WeakDescent};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Permutation(Vec<u32>);

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ReducedWord(pub Vec<u32>);

/// Maximal increasing runs of a word, leftmost block first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunDecomposition {
    pub blocks: Vec<Vec<u32>>,
}

impl Permutation {
    pub fn new(oneline: Vec<u32>) -> Result<Self> {
        let n = oneline.len();
        let mut seen = vec![false; n + 1];
        for &v in &oneline {
            if v == 0 || v as usize > n || seen[v as usize] {
                return Err(Error::Invalid(format!("not a permutation: {oneline:?}")));
            }
            seen[v as usize] = true;
        }
        Ok(Permutation(oneline))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u32).collect())
    }

    pub fn oneline(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// Number of inversions.
    pub fn inv(&self) -> usize {
        let w = &self.0;
        let mut c = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    c += 1;
                }
            }
        }
        c
    }

    /// Positions `p` (1-based) with `w(p) > w(p+1)`.
    pub fn descents(&self) -> Vec<u32> {
        self.0.windows(2).enumerate().filter(|(_, w)| w[0] > w[1]).map(|(p, _)| p as u32 + 1).collect()
    }

    /// `1^m × w`.
    pub fn shift(&self, m: usize) -> Permutation {
        let mut v: Vec<u32> = (1..=m as u32).collect();
        v.extend(self.0.iter().map(|x| x + m as u32));
        Permutation(v)
    }

    /// The permutation a word multiplies to, in `S_n` with `n` the smallest
    /// size that holds every letter (or `min_n`, if larger). `None` when the
    /// word is not reduced.
    pub fn from_word(word: &[u32], min_n: usize) -> Option<Permutation> {
        let n = word.iter().map(|&l| l as usize + 1).max().unwrap_or(0).max(min_n);
        let mut w: Vec<u32> = (1..=n as u32).collect();
        for &l in word.iter().rev() {
            if l == 0 {
                return None;
            }
            let p = l as usize - 1;
            if w[p] > w[p + 1] {
                return None;
            }
            w.swap(p, p + 1);
        }
        Some(Permutation(w))
    }

    /// Pads with fixed points up to size `n`.
    pub fn padded(&self, n: usize) -> Permutation {
        let mut v = self.0.clone();
        for x in v.len() + 1..=n {
            v.push(x as u32);
        }
        Permutation(v)
    }

    /// Strips trailing fixed points.
    pub fn trimmed(&self) -> Permutation {
        let mut v = self.0.clone();
        while v.last().map(|&x| x as usize == v.len()).unwrap_or(false) {
            v.pop();
        }
        Permutation(v)
    }

    pub fn all(n: usize) -> Vec<Permutation> {
        fn rec(n: usize, cur: &mut Vec<u32>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
            if cur.len() == n {
                out.push(Permutation(cur.clone()));
                return;
            }
            for v in 1..=n {
                if !used[v] {
                    used[v] = true;
                    cur.push(v as u32);
                    rec(n, cur, used, out);
                    cur.pop();
                    used[v] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(n, &mut Vec::new(), &mut vec![false; n + 1], &mut out);
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() < 10 {
            for v in &self.0 {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl FromStr for Permutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let v = if t.contains(',') || t.contains(' ') || t.starts_with('(') {
            parse_parts(&t.replace(' ', ","))?
        } else {
            t.chars()
                .map(|c| c.to_digit(10).ok_or_else(|| Error::Parse(format!("bad permutation {s:?}"))))
                .collect::<Result<_>>()?
        };
        Permutation::new(v)
    }
}

impl ReducedWord {
    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn shifted(&self, m: u32) -> ReducedWord {
        ReducedWord(self.0.iter().map(|l| l + m).collect())
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for ReducedWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(ReducedWord(parse_parts(s)?))
    }
}

impl fmt::Display for RunDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> =
            self.blocks.iter().map(|b| b.iter().map(|v| v.to_string()).collect::<String>()).collect();
        write!(f, "({})", blocks.join("|"))
    }
}

impl RunDecomposition {
    /// Block lengths, rightmost block first.
    pub fn descent_composition(&self) -> StrongComposition {
        let parts = self.blocks.iter().rev().map(|b| b.len() as u32).collect();
        StrongComposition::new(parts).expect("runs are nonempty")
    }

    /// Block lengths, leftmost block first.
    pub fn reading_composition(&self) -> StrongComposition {
        let parts = self.blocks.iter().map(|b| b.len() as u32).collect();
        StrongComposition::new(parts).expect("runs are nonempty")
    }
}

/// Splits a word into maximal runs; `strict` selects strictly increasing
/// runs, otherwise weakly increasing.
pub fn runs(word: &[u32], strict: bool) -> RunDecomposition {
    let mut blocks: Vec<Vec<u32>> = Vec::new();
    for &l in word {
        match blocks.last_mut() {
            Some(b) if (strict && *b.last().unwrap() < l) || (!strict && *b.last().unwrap() <= l) => b.push(l),
            _ => blocks.push(vec![l]),
        }
    }
    RunDecomposition { blocks }
}

pub fn run_decomposition(rho: &ReducedWord) -> RunDecomposition {
    runs(&rho.0, true)
}

/// `Des(ρ)`: run lengths with the rightmost run first.
pub fn descent_composition(rho: &ReducedWord) -> StrongComposition {
    run_decomposition(rho).descent_composition()
}

/// Positions `p` with `ρ_p ≥ ρ_{p+1}`; the descent set read left to right.
pub fn position_descents(word: &[u32]) -> Vec<u32> {
    word.windows(2).enumerate().filter(|(_, w)| w[0] >= w[1]).map(|(p, _)| p as u32 + 1).collect()
}

/// Rows of the runs, leftmost run first: `r_k` is the bound of the leftmost
/// run and `r_i = min(bound, r_{i+1} - 1)`, where `first` maps a run's
/// leading letter to its bound. Rows may come out nonpositive.
pub(crate) fn block_rows<F>(blocks: &[Vec<u32>], first: F) -> Vec<i64>
where
    F: Fn(&[u32]) -> i64,
{
    let mut rows: Vec<i64> = Vec::with_capacity(blocks.len());
    for b in blocks {
        let r = match rows.last() {
            None => first(b),
            Some(&above) => first(b).min(above - 1),
        };
        rows.push(r);
    }
    rows
}

/// Weak descent from the row of every entry: virtual if some row is
/// nonpositive, otherwise the number of entries in each row.
pub fn weak_descent_from_rows<'a, I>(rows: I, length: usize) -> Result<WeakDescent>
where
    I: IntoIterator<Item = &'a i64>,
{
    let rows: Vec<i64> = rows.into_iter().copied().collect();
    if rows.iter().any(|&r| r <= 0) {
        return Ok(WeakDescent::Virtual);
    }
    let mut parts = vec![0u32; length];
    for r in rows {
        let r = r as usize;
        if r > length {
            return Err(Error::Invalid(format!("weak descent row {r} exceeds length {length}")));
        }
        parts[r - 1] += 1;
    }
    Ok(WeakDescent::Weak(WeakComposition::new(parts)))
}

/// Places run `i` (counted from the right) at row `r_i` as in
/// [`block_rows`], using the leading letter.
pub(crate) fn weak_descent_of_runs<F>(blocks: &[Vec<u32>], length: usize, first: F) -> Result<WeakDescent>
where
    F: Fn(u32) -> i64,
{
    let rows = entry_rows_of_runs(blocks, |b| first(b[0]));
    weak_descent_from_rows(&rows, length)
}

/// Row of each letter, indexed by entry: entry 1 is the rightmost letter.
pub(crate) fn entry_rows_of_runs<F>(blocks: &[Vec<u32>], first: F) -> Vec<i64>
where
    F: Fn(&[u32]) -> i64,
{
    let rows = block_rows(blocks, first);
    let mut out: Vec<i64> = Vec::new();
    for (b, &r) in blocks.iter().zip(&rows).rev() {
        out.extend(std::iter::repeat_n(r, b.len()));
    }
    out
}

/// Row of each letter of a reduced word, entry 1 being the rightmost letter.
pub fn word_entry_rows(rho: &ReducedWord) -> Vec<i64> {
    entry_rows_of_runs(&run_decomposition(rho).blocks, |b| b[0] as i64)
}

/// `des(ρ)` padded to `length`, or virtual.
pub fn weak_descent_word(rho: &ReducedWord, length: usize) -> Result<WeakDescent> {
    let rd = run_decomposition(rho);
    weak_descent_of_runs(&rd.blocks, length, |l| l as i64)
}

/// All reduced words of `w`, sorted lexicographically.
pub fn reduced_words(w: &Permutation) -> Vec<ReducedWord> {
    fn rec(w: &mut Vec<u32>, cur: &mut Vec<u32>, out: &mut Vec<ReducedWord>) {
        let mut any = false;
        for p in 0..w.len().saturating_sub(1) {
            if w[p] > w[p + 1] {
                any = true;
                w.swap(p, p + 1);
                cur.push(p as u32 + 1);
                rec(w, cur, out);
                cur.pop();
                w.swap(p, p + 1);
            }
        }
        if !any {
            out.push(ReducedWord(cur.clone()));
        }
    }
    let mut out = Vec::new();
    rec(&mut w.0.clone(), &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// `v(λ, k)`: `v_i = i + λ_{k-i+1}` for `i ≤ k`, remaining values increasing.
pub fn grassmannian(lambda: &Partition, k: usize) -> Result<Permutation> {
    if k == 0 || lambda.len() > k {
        return Err(Error::Invalid(format!("grassmannian needs k ≥ {} and k > 0", lambda.len())));
    }
    let n = k + lambda.part(0) as usize;
    let mut v: Vec<u32> = (1..=k).map(|i| i as u32 + lambda.part(k - i)).collect();
    let rest: Vec<u32> = (1..=n as u32).filter(|x| !v.contains(x)).collect();
    v.extend(rest);
    Permutation::new(v)
}

/// The weak-descent length used for `w ∈ S_n`: `n - 1`.
pub fn des_length(w: &Permutation) -> usize {
    w.len().saturating_sub(1)
}

/// Smallest `m` for which no reduced word of `1^m × w` is virtual.
pub fn stabilization_shift(w: &Permutation) -> usize {
    let words = reduced_words(w);
    let base = des_length(w);
    let mut m = 0;
    loop {
        let all_real =
            words.iter().all(|r| matches!(weak_descent_word(&r.shifted(m as u32), base + m), Ok(WeakDescent::Weak(_))));
        if all_real {
            return m;
        }
        m += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn word(v: &[u32]) -> ReducedWord {
        ReducedWord(v.to_vec())
    }

    #[test]
    fn inversions() {
        assert_eq!(perm("42153").inv(), 5);
        assert_eq!(Permutation::identity(4).inv(), 0);
        assert_eq!(perm("21").inv(), 1);
    }

    #[test]
    fn words_of_small_permutations() {
        assert_eq!(reduced_words(&Permutation::identity(3)), vec![word(&[])]);
        assert_eq!(reduced_words(&perm("321")), vec![word(&[1, 2, 1]), word(&[2, 1, 2])]);
        let r = reduced_words(&perm("42153"));
        assert_eq!(r.len(), 11);
        assert!(r.contains(&word(&[4, 2, 1, 2, 3])));
        assert!(r.contains(&word(&[1, 2, 1, 4, 3])));
        for rho in &r {
            assert_eq!(Permutation::from_word(&rho.0, 5), Some(perm("42153")));
        }
    }

    #[test]
    fn runs_and_descents() {
        let rd = run_decomposition(&word(&[1, 4, 2, 3, 1]));
        assert_eq!(rd.to_string(), "(14|23|1)");
        assert_eq!(rd.descent_composition().parts(), &[1, 2, 2]);
        assert_eq!(descent_composition(&word(&[1, 2, 3])).parts(), &[3]);
        assert_eq!(descent_composition(&word(&[3, 2, 1])).parts(), &[1, 1, 1]);
        assert_eq!(runs(&[2, 2, 1, 1, 1], false).reading_composition().parts(), &[2, 3]);
    }

    #[test]
    fn weak_descents_of_words() {
        let d = |v: &[u32]| weak_descent_word(&word(v), 4).unwrap();
        assert_eq!(d(&[4, 2, 1, 2, 3]).to_string(), "(3,1,0,1)");
        assert_eq!(d(&[2, 4, 1, 2, 3]).to_string(), "(3,2,0,0)");
        assert_eq!(d(&[1, 2, 4, 1, 3]), WeakDescent::Virtual);
        assert_eq!(weak_descent_word(&word(&[6, 4, 3, 4, 5]), 6).unwrap().to_string(), "(0,0,3,1,0,1)");
    }

    #[test]
    fn grassmannian_examples() {
        let l: Partition = "5,4,4,1".parse().unwrap();
        assert_eq!(grassmannian(&l, 6).unwrap().oneline(), &[1, 2, 4, 8, 9, 11, 3, 5, 6, 7, 10]);
        assert!(grassmannian(&Partition::default(), 1).unwrap().is_identity());
        assert_eq!(grassmannian(&"1".parse().unwrap(), 1).unwrap(), perm("21"));
        assert!(grassmannian(&l, 3).is_err());
    }

    #[test]
    fn shifting() {
        assert_eq!(perm("42153").shift(1), perm("153264"));
        assert_eq!(perm("42153").shift(0), perm("42153"));
        assert_eq!(perm("21").shift(2), perm("1243"));
    }

    #[test]
    fn stabilization() {
        assert_eq!(stabilization_shift(&Permutation::identity(3)), 0);
        // (1,2,1) has r_1 = 0, so 321 needs one shift
        assert_eq!(stabilization_shift(&perm("321")), 1);
    }

    #[test]
    fn permutation_text() {
        assert_eq!(perm("4,2,1,5,3"), perm("42153"));
        assert_eq!(perm("42153").to_string(), "42153");
        assert!("4215".parse::<Permutation>().is_err());
        let big = Permutation::identity(11);
        assert_eq!(big.to_string().parse::<Permutation>().unwrap(), big);
    }
}
