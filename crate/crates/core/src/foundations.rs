//! Compositions, sparse integer polynomials, the fundamental quasisymmetric
//! and fundamental slide polynomials, and triangular change of basis.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Coef = i64;

fn write_tuple(f: &mut fmt::Formatter<'_>, parts: &[u32]) -> fmt::Result {
    write!(f, "(")?;
    for (k, p) in parts.iter().enumerate() {
        if k > 0 {
            write!(f, ",")?;
        }
        write!(f, "{p}")?;
    }
    write!(f, ")")
}

/// Parses "0,3,0,2", "(0,3,0,2)" or "()" into a list of integers.
pub fn parse_parts(s: &str) -> Result<Vec<u32>> {
    let t = s.trim();
    let t = t.strip_prefix('(').unwrap_or(t);
    let t = t.strip_suffix(')').unwrap_or(t);
    if t.trim().is_empty() {
        return Ok(Vec::new());
    }
    t.split(',')
        .map(|p| p.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad integer {p:?} in {s:?}"))))
        .collect()
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeakComposition(pub Vec<u32>);

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct StrongComposition(Vec<u32>);

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<u32>);

impl WeakComposition {
    pub fn new(parts: Vec<u32>) -> Self {
        WeakComposition(parts)
    }

    pub fn zeros(n: usize) -> Self {
        WeakComposition(vec![0; n])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `0^m × a`.
    pub fn prepend_zeros(&self, m: usize) -> Self {
        let mut v = vec![0; m];
        v.extend_from_slice(&self.0);
        WeakComposition(v)
    }

    /// Pads with trailing zeros; never truncates.
    pub fn padded(&self, len: usize) -> Self {
        let mut v = self.0.clone();
        if v.len() < len {
            v.resize(len, 0);
        }
        WeakComposition(v)
    }

    pub fn contains(&self, inner: &WeakComposition) -> bool {
        self.len() == inner.len() && self.0.iter().zip(&inner.0).all(|(d, a)| a <= d)
    }

    pub fn is_weakly_increasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }
}

impl StrongComposition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Invalid(format!("strong composition with zero part: {parts:?}")));
        }
        Ok(StrongComposition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Partial sums, excluding 0 and including the total.
    pub fn partial_sums(&self) -> Vec<u32> {
        self.0
            .iter()
            .scan(0, |s, &p| {
                *s += p;
                Some(*s)
            })
            .collect()
    }

    /// The composition of `n` whose descent set is `set` (entries of 1..n-1).
    pub fn from_descent_set(n: u32, set: &[u32]) -> Self {
        let mut parts = Vec::new();
        let mut last = 0;
        let mut sorted: Vec<u32> = set.iter().copied().filter(|&d| d > 0 && d < n).collect();
        sorted.sort_unstable();
        sorted.dedup();
        for d in sorted {
            parts.push(d - last);
            last = d;
        }
        if n > last {
            parts.push(n - last);
        }
        StrongComposition(parts)
    }

    pub fn descent_set(&self) -> Vec<u32> {
        let mut sums = self.partial_sums();
        sums.pop();
        sums
    }

    pub fn reversed(&self) -> Self {
        StrongComposition(self.0.iter().rev().copied().collect())
    }

    pub fn is_partition(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid(format!("not a partition: {parts:?}")));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Parts padded with zeros to length `k`.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn contains(&self, mu: &Partition) -> bool {
        mu.len() <= self.len() && mu.0.iter().enumerate().all(|(i, &m)| m <= self.0[i])
    }

    /// `a(λ, k)`: the weakly increasing weak composition of length `k` sorting to λ.
    pub fn increasing_composition(&self, k: usize) -> Result<WeakComposition> {
        if self.len() > k {
            return Err(Error::Invalid(format!("partition {self} has more than {k} parts")));
        }
        let mut v = vec![0; k - self.len()];
        v.extend(self.0.iter().rev());
        Ok(WeakComposition(v))
    }

    pub fn as_strong(&self) -> StrongComposition {
        StrongComposition(self.0.clone())
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all_of(n: u32) -> Vec<Partition> {
        fn rec(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=max.min(n)).rev() {
                cur.push(p);
                rec(n - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for WeakComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

impl fmt::Display for StrongComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

impl FromStr for WeakComposition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(WeakComposition(parse_parts(s)?))
    }
}

impl FromStr for StrongComposition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        StrongComposition::new(parse_parts(s)?)
    }
}

/// Besides the comma form, a bare digit string such as "332" is read one
/// part per digit.
impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.len() > 1 && t.chars().all(|c| c.is_ascii_digit()) {
            return Partition::new(t.chars().map(|c| c.to_digit(10).unwrap_or(0)).collect());
        }
        Partition::new(parse_parts(s)?)
    }
}

/// A weak descent composition, or the virtual marker ∅.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum WeakDescent {
    Virtual,
    Weak(WeakComposition),
}

impl WeakDescent {
    pub fn is_virtual(&self) -> bool {
        matches!(self, WeakDescent::Virtual)
    }

    pub fn weak(&self) -> Option<&WeakComposition> {
        match self {
            WeakDescent::Virtual => None,
            WeakDescent::Weak(a) => Some(a),
        }
    }
}

impl fmt::Display for WeakDescent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeakDescent::Virtual => write!(f, "virtual"),
            WeakDescent::Weak(a) => write!(f, "{a}"),
        }
    }
}

pub fn flat(a: &WeakComposition) -> StrongComposition {
    StrongComposition(a.0.iter().copied().filter(|&p| p > 0).collect())
}

pub fn sort(a: &WeakComposition) -> Partition {
    let mut v: Vec<u32> = a.0.iter().copied().filter(|&p| p > 0).collect();
    v.sort_unstable_by(|x, y| y.cmp(x));
    Partition(v)
}

/// True when every partial sum of `alpha` is a partial sum of `beta`
/// and the two have the same size.
pub fn refines(beta: &StrongComposition, alpha: &StrongComposition) -> bool {
    if beta.size() != alpha.size() {
        return false;
    }
    let sb = beta.partial_sums();
    alpha.partial_sums().iter().all(|s| sb.binary_search(s).is_ok())
}

/// Prefix-sum dominance `b ≥ a`.
pub fn prefix_geq(b: &WeakComposition, a: &WeakComposition) -> Result<bool> {
    if b.len() != a.len() {
        return Err(Error::LengthMismatch(b.len(), a.len()));
    }
    let (mut sb, mut sa) = (0u64, 0u64);
    for (x, y) in b.0.iter().zip(&a.0) {
        sb += *x as u64;
        sa += *y as u64;
        if sb < sa {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Finitely supported map from exponent vectors of length `nvars` to
/// nonzero integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "JsonPolynomial", try_from = "JsonPolynomial")]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Coef>,
}

#[derive(Serialize, Deserialize)]
struct JsonMonomial {
    exponent: Vec<u32>,
    coef: Coef,
}

#[derive(Serialize, Deserialize)]
struct JsonPolynomial {
    nvars: usize,
    terms: Vec<JsonMonomial>,
}

impl From<Polynomial> for JsonPolynomial {
    fn from(p: Polynomial) -> Self {
        JsonPolynomial {
            nvars: p.nvars,
            terms: p.terms.into_iter().map(|(exponent, coef)| JsonMonomial { exponent, coef }).collect(),
        }
    }
}

impl TryFrom<JsonPolynomial> for Polynomial {
    type Error = Error;
    fn try_from(j: JsonPolynomial) -> Result<Self> {
        let mut p = Polynomial::zero(j.nvars);
        for t in j.terms {
            p.add_term(t.exponent, t.coef)?;
        }
        Ok(p)
    }
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(vec![0; nvars], 1)
    }

    pub fn monomial(exp: Vec<u32>, coef: Coef) -> Self {
        let mut p = Polynomial::zero(exp.len());
        if coef != 0 {
            p.terms.insert(exp, coef);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Coef> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coef(&self, exp: &[u32]) -> Coef {
        self.terms.get(exp).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, exp: Vec<u32>, coef: Coef) -> Result<()> {
        if exp.len() != self.nvars {
            return Err(Error::LengthMismatch(exp.len(), self.nvars));
        }
        if coef == 0 {
            return Ok(());
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coef);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let c = o.get().checked_add(coef).ok_or(Error::Overflow)?;
                if c == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = c;
                }
            }
        }
        Ok(())
    }

    /// Adds `scale · q` in place.
    pub fn add_scaled(&mut self, q: &Polynomial, scale: Coef) -> Result<()> {
        if q.nvars != self.nvars {
            return Err(Error::LengthMismatch(self.nvars, q.nvars));
        }
        for (e, c) in &q.terms {
            let c = c.checked_mul(scale).ok_or(Error::Overflow)?;
            self.add_term(e.clone(), c)?;
        }
        Ok(())
    }

    pub fn add(&self, q: &Polynomial) -> Result<Polynomial> {
        let mut r = self.clone();
        r.add_scaled(q, 1)?;
        Ok(r)
    }

    pub fn sub(&self, q: &Polynomial) -> Result<Polynomial> {
        let mut r = self.clone();
        r.add_scaled(q, -1)?;
        Ok(r)
    }

    pub fn mul(&self, q: &Polynomial) -> Result<Polynomial> {
        if q.nvars != self.nvars {
            return Err(Error::LengthMismatch(self.nvars, q.nvars));
        }
        let mut r = Polynomial::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &q.terms {
                let e: Vec<u32> =
                    e1.iter().zip(e2).map(|(x, y)| x.checked_add(*y).ok_or(Error::Overflow)).collect::<Result<_>>()?;
                r.add_term(e, c1.checked_mul(*c2).ok_or(Error::Overflow)?)?;
            }
        }
        Ok(r)
    }

    /// Adds trailing variables that do not occur.
    pub fn padded(&self, nvars: usize) -> Result<Polynomial> {
        if nvars < self.nvars {
            return Err(Error::LengthMismatch(nvars, self.nvars));
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e = e.clone();
                e.resize(nvars, 0);
                (e, *c)
            })
            .collect();
        Ok(Polynomial { nvars, terms })
    }

    /// Prepends `m` variables that do not occur.
    pub fn shifted(&self, m: usize) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut v = vec![0; m];
                v.extend_from_slice(e);
                (v, *c)
            })
            .collect();
        Polynomial { nvars: self.nvars + m, terms }
    }

    /// Invariance under every adjacent transposition of variables.
    pub fn is_symmetric(&self) -> bool {
        (0..self.nvars.saturating_sub(1)).all(|i| {
            self.terms.iter().all(|(e, c)| {
                let mut f = e.clone();
                f.swap(i, i + 1);
                self.coef(&f) == *c
            })
        })
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return writeln!(f, "0");
        }
        for (e, c) in &self.terms {
            write!(f, "{c} x^")?;
            write_tuple(f, e)?;
            writeln!(f)?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Basis {
    Monomial,
    FundamentalF,
    Slide,
    Schur,
    Key,
}

impl Basis {
    /// Short name used in the inline text form.
    pub fn symbol(self) -> &'static str {
        match self {
            Basis::Monomial => "x",
            Basis::FundamentalF => "F",
            Basis::Slide => "slide",
            Basis::Schur => "s",
            Basis::Key => "key",
        }
    }
}

impl FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "monomial" | "x" => Ok(Basis::Monomial),
            "fundamental" | "fundamental_f" | "f" | "quasisymmetric" => Ok(Basis::FundamentalF),
            "slide" => Ok(Basis::Slide),
            "schur" | "s" => Ok(Basis::Schur),
            "key" => Ok(Basis::Key),
            _ => Err(Error::Parse(format!("unknown basis {s:?}"))),
        }
    }
}

/// Integer combination of basis elements, keyed by index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "JsonExpansion", try_from = "JsonExpansion")]
pub struct BasisExpansion {
    pub basis: Basis,
    terms: BTreeMap<Vec<u32>, Coef>,
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    index: Vec<u32>,
    coef: Coef,
}

#[derive(Serialize, Deserialize)]
struct JsonExpansion {
    basis: Basis,
    terms: Vec<JsonTerm>,
}

impl From<BasisExpansion> for JsonExpansion {
    fn from(e: BasisExpansion) -> Self {
        JsonExpansion {
            basis: e.basis,
            terms: e.terms.into_iter().map(|(index, coef)| JsonTerm { index, coef }).collect(),
        }
    }
}

impl TryFrom<JsonExpansion> for BasisExpansion {
    type Error = Error;
    fn try_from(j: JsonExpansion) -> Result<Self> {
        BasisExpansion::from_terms(j.basis, j.terms.into_iter().map(|t| (t.index, t.coef)))
    }
}

impl BasisExpansion {
    pub fn new(basis: Basis) -> Self {
        BasisExpansion { basis, terms: BTreeMap::new() }
    }

    pub fn from_terms<I: IntoIterator<Item = (Vec<u32>, Coef)>>(basis: Basis, it: I) -> Result<Self> {
        let mut e = BasisExpansion::new(basis);
        for (k, c) in it {
            e.add(k, c)?;
        }
        Ok(e)
    }

    pub fn add(&mut self, index: Vec<u32>, coef: Coef) -> Result<()> {
        if coef == 0 {
            return Ok(());
        }
        let slot = self.terms.entry(index).or_insert(0);
        *slot = slot.checked_add(coef).ok_or(Error::Overflow)?;
        if *slot == 0 {
            self.terms.retain(|_, c| *c != 0);
        }
        Ok(())
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Coef> {
        &self.terms
    }

    pub fn coef(&self, index: &[u32]) -> Coef {
        self.terms.get(index).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|&c| c > 0)
    }

    /// Sum of coefficients.
    pub fn mass(&self) -> Coef {
        self.terms.values().sum()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("expansion serializes")
    }

    /// Reconstructs the polynomial `Σ c · b_index` in `nvars` variables.
    /// Fundamental and Schur indices are realized in `nvars` variables;
    /// slide, key and monomial indices must have length `nvars`.
    pub fn realize(&self, nvars: usize) -> Result<Polynomial> {
        let mut p = Polynomial::zero(nvars);
        for (k, c) in &self.terms {
            let q = match self.basis {
                Basis::Monomial => Polynomial::monomial(k.clone(), 1),
                Basis::Slide => fundamental_slide(&WeakComposition(k.clone())),
                Basis::Key => crate::bases::key_poly(&WeakComposition(k.clone())),
                Basis::FundamentalF => fundamental_f(&StrongComposition::new(k.clone())?, nvars),
                Basis::Schur => crate::bases::schur_poly(&Partition::new(k.clone())?, nvars)?,
            };
            p.add_scaled(&q, *c)?;
        }
        Ok(p)
    }
}

impl fmt::Display for BasisExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (k, c)) in self.terms.iter().enumerate() {
            match (n, *c < 0) {
                (0, _) => write!(f, "{c}*")?,
                (_, false) => write!(f, " + {c}*")?,
                (_, true) => write!(f, " - {}*", c.unsigned_abs())?,
            }
            write!(f, "{}", self.basis.symbol())?;
            write_tuple(f, k)?;
        }
        Ok(())
    }
}

/// Reads the text form written by `Display`, e.g.
/// "1*key(3,1,0,1) - 2*key(3,2,0,0)". A bare index like "key(0,3,0,2)"
/// has coefficient 1.
impl FromStr for BasisExpansion {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let bad = || Error::Parse(format!("bad expansion {s:?}"));
        let mut basis = None;
        let mut terms = Vec::new();
        let mut sign = 1;
        let mut rest = t;
        if rest == "0" {
            return Err(Error::Parse("the zero expansion has no basis; name one term".into()));
        }
        loop {
            rest = rest.trim_start();
            if let Some(r) = rest.strip_prefix('-') {
                sign = -sign;
                rest = r.trim_start();
            }
            let close = rest.find(')').ok_or_else(bad)?;
            let (term, after) = rest.split_at(close + 1);
            let open = term.find('(').ok_or_else(bad)?;
            let (head, index) = term.split_at(open);
            let (coef, symbol) = match head.split_once('*') {
                Some((c, b)) => (c.trim().parse::<Coef>().map_err(|_| bad())?, b.trim()),
                None => (1, head.trim()),
            };
            let b: Basis = symbol.parse()?;
            if *basis.get_or_insert(b) != b {
                return Err(Error::Parse(format!("mixed bases in {s:?}")));
            }
            terms.push((parse_parts(index)?, sign * coef));
            let after = after.trim_start();
            if after.is_empty() {
                break;
            }
            let (op, r) = after.split_at(1);
            sign = match op {
                "+" => 1,
                "-" => -1,
                _ => return Err(bad()),
            };
            rest = r;
        }
        BasisExpansion::from_terms(basis.ok_or_else(bad)?, terms)
    }
}

/// Walks all weak compositions `b` of length `n` and total `total` whose
/// running sums hit every value of `stops` and, when `floor` is given,
/// dominate `floor` prefix-wise.
fn walk_refining(n: usize, total: u32, stops: &[u32], floor: Option<&[u32]>, out: &mut Polynomial) {
    #[allow(clippy::too_many_arguments)]
    fn rec(
        k: usize,
        n: usize,
        sum: u32,
        next_stop: usize,
        stops: &[u32],
        floor: Option<&[u32]>,
        cur: &mut Vec<u32>,
        out: &mut Polynomial,
    ) {
        let total = *stops.last().unwrap_or(&0);
        if k == n {
            if sum == total {
                out.terms.insert(cur.clone(), 1);
            }
            return;
        }
        let need = floor.map(|f| f[k]).unwrap_or(0);
        // the running sum cannot step over a stop without landing on it
        let cap = stops.get(next_stop).copied().unwrap_or(total);
        let lo = need.max(sum);
        for s in lo..=cap {
            let stop = if s == cap && next_stop < stops.len() { next_stop + 1 } else { next_stop };
            cur.push(s - sum);
            rec(k + 1, n, s, stop, stops, floor, cur, out);
            cur.pop();
        }
    }
    let _ = total;
    let mut cur = Vec::with_capacity(n);
    rec(0, n, 0, 0, stops, floor, &mut cur, out);
}

/// `F_α(x_1, …, x_n)`.
pub fn fundamental_f(alpha: &StrongComposition, nvars: usize) -> Polynomial {
    let mut p = Polynomial::zero(nvars);
    if alpha.is_empty() {
        p.terms.insert(vec![0; nvars], 1);
        return p;
    }
    let stops = alpha.partial_sums();
    walk_refining(nvars, alpha.size(), &stops, None, &mut p);
    p
}

/// The fundamental slide polynomial `𝔉_a` in `len(a)` variables.
pub fn fundamental_slide(a: &WeakComposition) -> Polynomial {
    let n = a.len();
    let mut p = Polynomial::zero(n);
    let fl = flat(a);
    if fl.is_empty() {
        p.terms.insert(vec![0; n], 1);
        return p;
    }
    let stops = fl.partial_sums();
    let floor: Vec<u32> =
        a.0.iter()
            .scan(0, |s, &x| {
                *s += x;
                Some(*s)
            })
            .collect();
    walk_refining(n, fl.size(), &stops, Some(&floor), &mut p);
    p
}

/// Generic unitriangular expansion: repeatedly take the lexicographically
/// smallest surviving exponent (which is prefix-minimal, since prefix
/// dominance implies lexicographic order) and subtract that multiple of
/// the basis element indexed by it.
pub fn expand_triangular<F>(p: &Polynomial, basis: Basis, mut element: F) -> Result<BasisExpansion>
where
    F: FnMut(&WeakComposition) -> Result<Polynomial>,
{
    let mut residual = p.clone();
    let mut out = BasisExpansion::new(basis);
    while let Some((e, c)) = residual.terms.iter().next().map(|(e, c)| (e.clone(), *c)) {
        let a = WeakComposition(e.clone());
        let q = element(&a)?;
        if q.coef(&e) != 1 {
            return Err(Error::Residual);
        }
        residual.add_scaled(&q, -c)?;
        if residual.coef(&e) != 0 {
            return Err(Error::Residual);
        }
        out.add(e, c)?;
    }
    Ok(out)
}

pub fn expand_in_slide(p: &Polynomial) -> Result<BasisExpansion> {
    expand_triangular(p, Basis::Slide, |a| Ok(fundamental_slide(a)))
}

pub fn expand_in_key(p: &Polynomial) -> Result<BasisExpansion> {
    expand_triangular(p, Basis::Key, |a| Ok(crate::bases::key_poly(a)))
}

pub fn expand_in_monomial(p: &Polynomial) -> BasisExpansion {
    BasisExpansion { basis: Basis::Monomial, terms: p.terms.clone() }
}

/// Schur expansion of a symmetric polynomial, via its key expansion: only
/// keys indexed by weakly increasing compositions are Schur polynomials.
pub fn expand_in_schur(p: &Polynomial) -> Result<BasisExpansion> {
    if !p.is_symmetric() {
        return Err(Error::NotSymmetric(p.nvars));
    }
    let keys = expand_in_key(p)?;
    let mut out = BasisExpansion::new(Basis::Schur);
    for (k, c) in keys.terms() {
        let a = WeakComposition(k.clone());
        if !a.is_weakly_increasing() {
            return Err(Error::NotSymmetric(p.nvars));
        }
        out.add(sort(&a).0, *c)?;
    }
    Ok(out)
}

/// Expansion of a quasisymmetric polynomial in the fundamental basis,
/// restricted to indices with at most `nvars` parts. Flattening a slide
/// expansion is the same operation one level up.
pub fn flatten_expansion(e: &BasisExpansion) -> Result<BasisExpansion> {
    let mut out = BasisExpansion::new(Basis::FundamentalF);
    for (k, c) in e.terms() {
        out.add(flat(&WeakComposition(k.clone())).0, *c)?;
    }
    Ok(out)
}

/// All weak compositions of `total` with exactly `len` parts.
pub fn weak_compositions(total: u32, len: usize) -> Vec<WeakComposition> {
    fn rec(left: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<WeakComposition>) {
        if slots == 1 {
            cur.push(left);
            out.push(WeakComposition(cur.clone()));
            cur.pop();
            return;
        }
        for p in 0..=left {
            cur.push(p);
            rec(left - p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if len == 0 {
        if total == 0 {
            out.push(WeakComposition(Vec::new()));
        }
        return out;
    }
    rec(total, len, &mut Vec::new(), &mut out);
    out
}

/// All strong compositions of `total`.
pub fn strong_compositions(total: u32) -> Vec<StrongComposition> {
    if total == 0 {
        return vec![StrongComposition(Vec::new())];
    }
    // descent sets are subsets of 1..total-1
    (0u64..(1u64 << (total - 1)))
        .map(|mask| {
            let set: Vec<u32> = (1..total).filter(|d| mask >> (d - 1) & 1 == 1).collect();
            StrongComposition::from_descent_set(total, &set)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wc(v: &[u32]) -> WeakComposition {
        WeakComposition(v.to_vec())
    }

    fn sc(v: &[u32]) -> StrongComposition {
        StrongComposition::new(v.to_vec()).unwrap()
    }

    fn support(p: &Polynomial) -> Vec<Vec<u32>> {
        p.terms().keys().cloned().collect()
    }

    #[test]
    fn flat_and_sort() {
        assert_eq!(flat(&wc(&[0, 3, 0, 2])), sc(&[3, 2]));
        assert_eq!(flat(&wc(&[0, 0, 0])), sc(&[]));
        assert_eq!(flat(&wc(&[1, 2, 2])), sc(&[1, 2, 2]));
        assert_eq!(sort(&wc(&[3, 2, 3])).parts(), &[3, 3, 2]);
        assert_eq!(sort(&wc(&[])).parts(), &[] as &[u32]);
        assert_eq!(sort(&wc(&[0, 1, 2])).parts(), &[2, 1]);
    }

    #[test]
    fn refinement_examples() {
        assert!(refines(&sc(&[1, 2, 2]), &sc(&[3, 2])));
        assert!(!refines(&sc(&[1, 2, 2]), &sc(&[2, 3])));
        assert!(refines(&sc(&[3, 2]), &sc(&[3, 2])));
    }

    #[test]
    fn prefix_order_examples() {
        assert!(prefix_geq(&wc(&[1, 2, 2]), &wc(&[0, 3, 2])).unwrap());
        assert!(prefix_geq(&wc(&[0, 3, 2]), &wc(&[0, 3, 2])).unwrap());
        assert!(!prefix_geq(&wc(&[0, 3, 2]), &wc(&[1, 2, 2])).unwrap());
        assert!(prefix_geq(&wc(&[1]), &wc(&[1, 0])).is_err());
    }

    #[test]
    fn fundamental_f_in_three_variables() {
        let p = fundamental_f(&sc(&[3, 2]), 3);
        let want = [[0, 3, 2], [3, 0, 2], [3, 2, 0], [3, 1, 1], [1, 2, 2], [2, 1, 2]];
        assert_eq!(p.len(), 6);
        for e in want {
            assert_eq!(p.coef(&e), 1, "{e:?}");
        }
        assert_eq!(support(&fundamental_f(&sc(&[1]), 1)), vec![vec![1]]);
        assert_eq!(fundamental_f(&sc(&[1, 1, 1]), 2), Polynomial::zero(2));
    }

    #[test]
    fn slide_examples() {
        let p = fundamental_slide(&wc(&[0, 3, 2]));
        let mut want = vec![vec![0, 3, 2], vec![1, 2, 2], vec![2, 1, 2], vec![3, 0, 2], vec![3, 1, 1], vec![3, 2, 0]];
        want.sort();
        assert_eq!(support(&p), want);
        assert_eq!(support(&fundamental_slide(&wc(&[2, 0, 0]))), vec![vec![2, 0, 0]]);
        let mut want = vec![vec![0, 0, 2], vec![0, 1, 1], vec![0, 2, 0], vec![1, 0, 1], vec![1, 1, 0], vec![2, 0, 0]];
        want.sort();
        assert_eq!(support(&fundamental_slide(&wc(&[0, 0, 2]))), want);
    }

    #[test]
    fn ring_operations() {
        let p = fundamental_slide(&wc(&[0, 2, 1]));
        assert!(p.sub(&p).unwrap().is_zero());
        let x = Polynomial::monomial(vec![1, 0], 1);
        let y = Polynomial::monomial(vec![0, 1], 1);
        assert_eq!(x.mul(&y).unwrap(), Polynomial::monomial(vec![1, 1], 1));
        assert!(x.add(&Polynomial::zero(3)).is_err());
    }

    #[test]
    fn overflow_is_reported() {
        let big = Polynomial::monomial(vec![1], i64::MAX);
        assert_eq!(big.add(&big), Err(Error::Overflow));
        assert_eq!(big.mul(&Polynomial::monomial(vec![0], 2)), Err(Error::Overflow));
    }

    #[test]
    fn slide_expansion_of_basis_element_and_zero() {
        let e = expand_in_slide(&fundamental_slide(&wc(&[0, 3, 2]))).unwrap();
        assert_eq!(e.to_string(), "1*slide(0,3,2)");
        assert!(expand_in_slide(&Polynomial::zero(3)).unwrap().is_empty());
    }

    #[test]
    fn schur_expansion_of_square_of_e1() {
        let e1 = Polynomial::monomial(vec![1, 0], 1).add(&Polynomial::monomial(vec![0, 1], 1)).unwrap();
        let e = expand_in_schur(&e1.mul(&e1).unwrap()).unwrap();
        assert_eq!(e.to_string(), "1*s(1,1) + 1*s(2)");
        let asym = Polynomial::monomial(vec![1, 0], 1);
        assert_eq!(expand_in_schur(&asym), Err(Error::NotSymmetric(2)));
    }

    #[test]
    fn descent_set_round_trip() {
        for n in 1..6 {
            for a in strong_compositions(n) {
                assert_eq!(StrongComposition::from_descent_set(n, &a.descent_set()), a);
            }
        }
        assert_eq!(strong_compositions(4).len(), 8);
    }

    #[test]
    fn text_forms() {
        assert_eq!(wc(&[0, 3, 0, 2]).to_string(), "(0,3,0,2)");
        assert_eq!("0,3,0,2".parse::<WeakComposition>().unwrap(), wc(&[0, 3, 0, 2]));
        assert_eq!("(3,2)".parse::<Partition>().unwrap().parts(), &[3, 2]);
        assert!("2,3".parse::<Partition>().is_err());
        assert_eq!("332".parse::<Partition>().unwrap().parts(), &[3, 3, 2]);
        assert!("1,x".parse::<WeakComposition>().is_err());
        let p = Polynomial::monomial(vec![1, 0], 2);
        assert_eq!(p.to_string(), "2 x^(1,0)\n");
    }

    #[test]
    fn expansion_text_round_trip() {
        let e: BasisExpansion = "1*key(3,1,0,1) - 2*key(3,2,0,0) + -1*key(0,0,0,4)".parse().unwrap();
        assert_eq!(e.coef(&[3, 2, 0, 0]), -2);
        assert_eq!(e.coef(&[0, 0, 0, 4]), -1);
        assert_eq!(e.to_string(), "-1*key(0,0,0,4) + 1*key(3,1,0,1) - 2*key(3,2,0,0)");
        assert_eq!(e.to_string().parse::<BasisExpansion>().unwrap(), e);
        let s: BasisExpansion = "s(3,2)".parse().unwrap();
        assert_eq!(s.basis, Basis::Schur);
        assert!("1*key(1) + 1*s(1)".parse::<BasisExpansion>().is_err());
        assert!("key(1".parse::<BasisExpansion>().is_err());
    }
}
