//! Involution families, their equivalence classes, the axiom checks for
//! (weak) dual equivalence, and rectification onto Young and key tableaux.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt::{Debug, Display};
use std::hash::Hash;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::foundations::{Partition, StrongComposition, WeakComposition, WeakDescent};
use crate::permwords::{position_descents, weak_descent_from_rows, word_entry_rows, ReducedWord};
use crate::tableaux::{enumerate_skt, enumerate_syt, super_standard, yamanouchi_key, Filling};

/// A family of involutions `φ_i`, `1 < i < n`, on some set of objects.
pub trait InvolutionFamily {
    type Obj: Clone + Eq + Hash + Ord + Debug + Display;

    /// The `n` of an object: letters of a word, entries of a tableau.
    fn degree(&self, x: &Self::Obj) -> usize;

    /// `φ_i(x)`; only called with `1 < i < degree(x)`.
    fn apply(&self, i: usize, x: &Self::Obj) -> Self::Obj;
}

/// Descent sets (subsets of `1..n`) for the dual equivalence axioms.
pub trait DescentStatistic: InvolutionFamily {
    fn descent_set(&self, x: &Self::Obj) -> Vec<u32>;

    fn descent_composition(&self, x: &Self::Obj) -> StrongComposition {
        StrongComposition::from_descent_set(self.degree(x) as u32, &self.descent_set(x))
    }
}

/// Weak descent compositions for the weak dual equivalence axioms. The
/// statistic assigns a row to every entry; an object is virtual when some
/// row is nonpositive.
pub trait WeakDescentStatistic: InvolutionFamily {
    /// Length of the weak compositions produced.
    fn length(&self, x: &Self::Obj) -> usize;

    /// Row of entry `v` at index `v - 1`.
    fn entry_rows(&self, x: &Self::Obj) -> Vec<i64>;

    fn weak_descent(&self, x: &Self::Obj) -> WeakDescent {
        weak_descent_from_rows(&self.entry_rows(x), self.length(x)).unwrap_or(WeakDescent::Virtual)
    }

    /// `des_{(h,i)}`: only entries `h..=i` are kept, so an object that is
    /// virtual because of a deleted entry can restrict to a real one.
    fn restricted_weak_descent(&self, x: &Self::Obj, h: usize, i: usize) -> WeakDescent {
        let rows = self.entry_rows(x);
        weak_descent_from_rows(&rows[h - 1..i], self.length(x)).unwrap_or(WeakDescent::Virtual)
    }
}

/// `𝔡_i` on words, acting on positions `i-1, i, i+1`.
pub fn word_d(i: usize, rho: &ReducedWord) -> Result<ReducedWord> {
    let n = rho.len();
    if i < 2 || i >= n {
        return Err(Error::IndexRange { index: i, size: n });
    }
    Ok(word_d_unchecked(i, rho))
}

fn word_d_unchecked(i: usize, rho: &ReducedWord) -> ReducedWord {
    let w = &rho.0;
    let (a, b, c) = (w[i - 2] as i64, w[i - 1] as i64, w[i] as i64);
    let mut out = w.clone();
    if a == c && (b - a).abs() == 1 {
        out[i - 2] = b as u32;
        out[i - 1] = a as u32;
        out[i] = b as u32;
    } else if (a > c && c > b) || (a < c && c < b) {
        out.swap(i - 2, i - 1);
    } else if (c > a && a > b) || (c < a && a < b) {
        out.swap(i - 1, i);
    }
    ReducedWord(out)
}

/// Reduced words under `𝔡_i`, with descents at positions `p` where
/// `ρ_p > ρ_{p+1}`.
#[derive(Clone, Copy, Debug, Default)]
pub struct WordFamily;

impl InvolutionFamily for WordFamily {
    type Obj = ReducedWord;
    fn degree(&self, x: &ReducedWord) -> usize {
        x.len()
    }
    fn apply(&self, i: usize, x: &ReducedWord) -> ReducedWord {
        word_d_unchecked(i, x)
    }
}

impl DescentStatistic for WordFamily {
    fn descent_set(&self, x: &ReducedWord) -> Vec<u32> {
        position_descents(&x.0)
    }
}

/// Reduced words as a weak family: `ψ_i = 𝔡_{n+1-i}`, so that `ψ_i` moves
/// the letters that play the role of entries `i-1, i, i+1` (the rightmost
/// letter is entry 1). Weak descents are taken at a fixed length.
#[derive(Clone, Copy, Debug)]
pub struct WordWeakFamily {
    pub length: usize,
}

impl InvolutionFamily for WordWeakFamily {
    type Obj = ReducedWord;
    fn degree(&self, x: &ReducedWord) -> usize {
        x.len()
    }
    fn apply(&self, i: usize, x: &ReducedWord) -> ReducedWord {
        word_d_unchecked(x.len() + 1 - i, x)
    }
}

impl WeakDescentStatistic for WordWeakFamily {
    fn length(&self, _: &ReducedWord) -> usize {
        self.length
    }
    fn entry_rows(&self, x: &ReducedWord) -> Vec<i64> {
        word_entry_rows(x)
    }
}

/// Young-shaped fillings under Haiman's involutions.
#[derive(Clone, Copy, Debug, Default)]
pub struct YoungFamily;

impl InvolutionFamily for YoungFamily {
    type Obj = Filling;
    fn degree(&self, x: &Filling) -> usize {
        x.n()
    }
    fn apply(&self, i: usize, x: &Filling) -> Filling {
        x.haiman_d(i).expect("index checked by caller")
    }
}

impl DescentStatistic for YoungFamily {
    fn descent_set(&self, x: &Filling) -> Vec<u32> {
        x.descent_set()
    }
}

/// Key-shaped fillings (straight, skew, product) under `d_i`.
#[derive(Clone, Copy, Debug, Default)]
pub struct KeyFamily;

impl InvolutionFamily for KeyFamily {
    type Obj = Filling;
    fn degree(&self, x: &Filling) -> usize {
        x.n()
    }
    fn apply(&self, i: usize, x: &Filling) -> Filling {
        x.skt_d(i).expect("index checked by caller")
    }
}

impl DescentStatistic for KeyFamily {
    fn descent_set(&self, x: &Filling) -> Vec<u32> {
        x.descent_set()
    }
}

impl WeakDescentStatistic for KeyFamily {
    fn length(&self, x: &Filling) -> usize {
        x.shape().height()
    }
    fn entry_rows(&self, x: &Filling) -> Vec<i64> {
        x.entry_rows().expect("key shape")
    }
}

/// The class of `x` generated by `φ_h, …, φ_i`, sorted.
pub fn orbit<F: InvolutionFamily>(fam: &F, x: &F::Obj, h: usize, i: usize) -> Vec<F::Obj> {
    let n = fam.degree(x);
    let lo = h.max(2);
    let hi = i.min(n.saturating_sub(1));
    let mut seen: HashSet<F::Obj> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(x.clone());
    queue.push_back(x.clone());
    while let Some(y) = queue.pop_front() {
        for j in lo..=hi {
            let z = fam.apply(j, &y);
            if seen.insert(z.clone()) {
                queue.push_back(z);
            }
        }
    }
    let mut out: Vec<F::Obj> = seen.into_iter().collect();
    out.sort();
    out
}

/// Partitions `carrier` into classes under `φ_h, …, φ_i`. Objects reached
/// outside the carrier are included in their class.
pub fn classes<F: InvolutionFamily>(fam: &F, carrier: &[F::Obj], h: usize, i: usize) -> Vec<Vec<F::Obj>> {
    let mut done: HashSet<F::Obj> = HashSet::new();
    let mut out = Vec::new();
    for x in carrier {
        if done.contains(x) {
            continue;
        }
        let c = orbit(fam, x, h, i);
        done.extend(c.iter().cloned());
        out.push(c);
    }
    out
}

/// Classes under every involution.
pub fn full_classes<F: InvolutionFamily>(fam: &F, carrier: &[F::Obj]) -> Vec<Vec<F::Obj>> {
    classes(fam, carrier, 2, usize::MAX)
}

/// `Des_{(h,i)}` from a descent set of an object with `n` entries: the
/// composition of `i - h + 1` recording descents among entries `h..=i`.
pub fn restrict_descent_set(set: &[u32], h: usize, i: usize) -> StrongComposition {
    let inner: Vec<u32> =
        set.iter().filter(|&&d| d as usize >= h && (d as usize) < i).map(|&d| d + 1 - h as u32).collect();
    StrongComposition::from_descent_set((i + 1 - h) as u32, &inner)
}

/// `Des_{(h,i)}`: deletes the first `h - 1` and last `n - i` cells.
pub fn restrict_des(des: &StrongComposition, h: usize, i: usize) -> Result<StrongComposition> {
    let n = des.size() as usize;
    if h < 1 || i > n || h > i {
        return Err(Error::Invalid(format!("window ({h},{i}) outside 1..{n}")));
    }
    Ok(restrict_descent_set(&des.descent_set(), h, i))
}

/// `des_{(h,i)}`: deletes the first `h - 1` and last `n - i` cells counted
/// through the nonzero parts, keeping every position.
pub fn restrict_weak_des(des: &WeakComposition, h: usize, i: usize) -> Result<WeakComposition> {
    let n = des.size() as usize;
    if h < 1 || i > n || h > i {
        return Err(Error::Invalid(format!("window ({h},{i}) outside 1..{n}")));
    }
    let mut parts = des.parts().to_vec();
    let mut front = h - 1;
    for p in parts.iter_mut() {
        let take = (*p as usize).min(front);
        *p -= take as u32;
        front -= take;
    }
    let mut back = n - i;
    for p in parts.iter_mut().rev() {
        let take = (*p as usize).min(back);
        *p -= take as u32;
        back -= take;
    }
    Ok(WeakComposition::new(parts))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum FailureKind {
    NotInvolution,
    LeavesCarrier,
    NotCommuting,
    ClassNotSchur,
    ClassNotKey,
}

#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub kind: FailureKind,
    /// `(h, i)` for class windows, `(i, j)` for commutation, `(i, i)` else.
    pub window: (usize, usize),
    pub witness: Vec<String>,
    pub detail: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct CheckReport {
    pub objects: usize,
    pub windows: usize,
    pub classes: usize,
    pub failures: Vec<Failure>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.objects += other.objects;
        self.windows += other.windows;
        self.classes += other.classes;
        self.failures.extend(other.failures);
    }
}

/// Multisets of Young descent compositions, keyed by partition.
#[derive(Default)]
pub struct YoungDescentCache(HashMap<Partition, Vec<StrongComposition>>);

impl YoungDescentCache {
    pub fn get(&mut self, lambda: &Partition) -> &Vec<StrongComposition> {
        self.0.entry(lambda.clone()).or_insert_with(|| {
            let mut v: Vec<StrongComposition> = enumerate_syt(lambda).iter().map(|t| t.descent_composition()).collect();
            v.sort();
            v
        })
    }
}

/// Multisets of nonvirtual key weak descents, keyed by shape.
#[derive(Default)]
pub struct KeyDescentCache(HashMap<WeakComposition, Vec<WeakComposition>>);

impl KeyDescentCache {
    pub fn get(&mut self, a: &WeakComposition) -> &Vec<WeakComposition> {
        self.0.entry(a.clone()).or_insert_with(|| {
            let mut v: Vec<WeakComposition> =
                enumerate_skt(a).iter().filter_map(|t| t.weak_descent().ok().and_then(|d| d.weak().cloned())).collect();
            v.sort();
            v
        })
    }
}

/// The partition `λ` with `Σ F_α = s_λ` over the multiset `des`, if any.
/// The lexicographically largest partition present is the only candidate,
/// since every other descent composition of `SYT(λ)` sorts below `λ`.
pub fn schur_of_multiset(des: &[StrongComposition], cache: &mut YoungDescentCache) -> Option<Partition> {
    let lambda = des.iter().filter(|c| c.is_partition()).max()?;
    let lambda = Partition::new(lambda.parts().to_vec()).ok()?;
    let mut sorted = des.to_vec();
    sorted.sort();
    (cache.get(&lambda) == &sorted).then_some(lambda)
}

/// The shape `a` with `Σ 𝔉_b = κ_a` over the nonvirtual multiset `des`.
pub fn key_of_multiset(des: &[WeakComposition], cache: &mut KeyDescentCache) -> Option<WeakComposition> {
    let mut sorted = des.to_vec();
    sorted.sort();
    let candidates: BTreeSet<WeakComposition> = sorted.iter().cloned().collect();
    candidates.into_iter().find(|a| cache.get(a) == &sorted)
}

fn involution_checks<F: InvolutionFamily>(fam: &F, carrier: &[F::Obj], report: &mut CheckReport) {
    let members: HashSet<&F::Obj> = carrier.iter().collect();
    for x in carrier {
        let n = fam.degree(x);
        for i in 2..n {
            let y = fam.apply(i, x);
            if fam.apply(i, &y) != *x {
                report.failures.push(Failure {
                    kind: FailureKind::NotInvolution,
                    window: (i, i),
                    witness: vec![x.to_string(), y.to_string()],
                    detail: format!("applying {i} twice does not return"),
                });
            }
            if !members.contains(&y) {
                report.failures.push(Failure {
                    kind: FailureKind::LeavesCarrier,
                    window: (i, i),
                    witness: vec![x.to_string(), y.to_string()],
                    detail: format!("involution {i} leaves the carrier"),
                });
            }
            for j in i + 3..n {
                let a = fam.apply(j, &y);
                let b = fam.apply(i, &fam.apply(j, x));
                if a != b {
                    report.failures.push(Failure {
                        kind: FailureKind::NotCommuting,
                        window: (i, j),
                        witness: vec![x.to_string()],
                        detail: format!("involutions {i} and {j} do not commute"),
                    });
                }
            }
        }
    }
}

/// Every window `(h, i)` with `1 < h ≤ i < n` and `i - h ≤ 3`.
pub fn all_windows(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for h in 2..n {
        for i in h..n.min(h + 4) {
            out.push((h, i));
        }
    }
    out
}

/// Checks the dual equivalence axioms on a carrier of objects of one degree,
/// over the given windows (all windows when `None`).
pub fn check_dual_equivalence<F: DescentStatistic>(
    fam: &F,
    carrier: &[F::Obj],
    windows: Option<&[(usize, usize)]>,
) -> CheckReport {
    let mut report = CheckReport { objects: carrier.len(), ..Default::default() };
    involution_checks(fam, carrier, &mut report);
    let Some(first) = carrier.first() else { return report };
    let n = fam.degree(first);
    let ws = windows.map(|w| w.to_vec()).unwrap_or_else(|| all_windows(n));
    let mut cache = YoungDescentCache::default();
    for (h, i) in ws {
        report.windows += 1;
        for class in classes(fam, carrier, h, i) {
            report.classes += 1;
            let des: Vec<StrongComposition> =
                class.iter().map(|u| restrict_descent_set(&fam.descent_set(u), h - 1, i + 1)).collect();
            if schur_of_multiset(&des, &mut cache).is_none() {
                report.failures.push(Failure {
                    kind: FailureKind::ClassNotSchur,
                    window: (h, i),
                    witness: class.iter().map(|u| u.to_string()).collect(),
                    detail: format!(
                        "restricted descents {} are not those of a Schur function",
                        des.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" ")
                    ),
                });
            }
        }
    }
    report
}

/// Checks the weak dual equivalence axioms; objects whose restricted weak
/// descent is virtual contribute nothing to a class's generating polynomial.
pub fn check_weak_dual_equivalence<F: WeakDescentStatistic>(
    fam: &F,
    carrier: &[F::Obj],
    windows: Option<&[(usize, usize)]>,
) -> CheckReport {
    let mut report = CheckReport { objects: carrier.len(), ..Default::default() };
    involution_checks(fam, carrier, &mut report);
    let Some(first) = carrier.first() else { return report };
    let n = fam.degree(first);
    let ws = windows.map(|w| w.to_vec()).unwrap_or_else(|| all_windows(n));
    let mut cache = KeyDescentCache::default();
    for (h, i) in ws {
        report.windows += 1;
        for class in classes(fam, carrier, h, i) {
            report.classes += 1;
            let des: Vec<WeakComposition> =
                class.iter().filter_map(|u| fam.restricted_weak_descent(u, h - 1, i + 1).weak().cloned()).collect();
            // a class of virtual objects generates 0 = 𝔉_∅
            if !des.is_empty() && key_of_multiset(&des, &mut cache).is_none() {
                report.failures.push(Failure {
                    kind: FailureKind::ClassNotKey,
                    window: (h, i),
                    witness: class.iter().map(|u| u.to_string()).collect(),
                    detail: format!(
                        "restricted weak descents [{}] are not those of a key polynomial",
                        des.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" ")
                    ),
                });
            }
        }
    }
    report
}

/// A class together with its rectification.
#[derive(Clone, Debug)]
pub struct Rectification<O: Ord> {
    pub shape: Partition,
    pub anchor: O,
    pub map: BTreeMap<O, Filling>,
}

/// Rectifies the full class of `x`: the unique member whose descent
/// composition is a partition `λ` maps to the super-standard tableau, and
/// `Φ(φ_i y) = d_i Φ(y)` propagates through the class. Every step is
/// checked.
pub fn rectify_class<F: DescentStatistic>(fam: &F, x: &F::Obj) -> Result<Rectification<F::Obj>> {
    let class = orbit(fam, x, 2, usize::MAX);
    let n = fam.degree(x);
    let comps: Vec<StrongComposition> = class.iter().map(|u| fam.descent_composition(u)).collect();
    let lambda = comps
        .iter()
        .filter(|c| c.is_partition())
        .max()
        .ok_or_else(|| Error::Inconsistent(format!("class of {x} has no partition descent")))?;
    let anchors: Vec<&F::Obj> = class.iter().zip(&comps).filter(|(_, c)| *c == lambda).map(|(u, _)| u).collect();
    if anchors.len() != 1 {
        return Err(Error::Inconsistent(format!("class of {x} has {} super-standard members", anchors.len())));
    }
    let lambda = Partition::new(lambda.parts().to_vec())?;
    let anchor = anchors[0].clone();
    let mut map: BTreeMap<F::Obj, Filling> = BTreeMap::new();
    map.insert(anchor.clone(), super_standard(&lambda));
    let mut queue = VecDeque::from([anchor.clone()]);
    while let Some(y) = queue.pop_front() {
        let img = map[&y].clone();
        for i in 2..n {
            let z = fam.apply(i, &y);
            let zi = img.haiman_d(i)?;
            match map.get(&z) {
                Some(prev) if *prev != zi => {
                    return Err(Error::Inconsistent(format!("rectification of {z} is not well defined")))
                }
                Some(_) => {}
                None => {
                    map.insert(z.clone(), zi);
                    queue.push_back(z);
                }
            }
        }
    }
    let images: HashSet<&Filling> = map.values().collect();
    if images.len() != map.len() || map.len() != enumerate_syt(&lambda).len() {
        return Err(Error::Inconsistent(format!("class of {x} is not in bijection with SYT{lambda}")));
    }
    for (y, t) in &map {
        if fam.descent_set(y) != t.descent_set() {
            return Err(Error::Inconsistent(format!("rectification of {y} changes descents")));
        }
    }
    Ok(Rectification { shape: lambda, anchor, map })
}

pub fn rectify<F: DescentStatistic>(fam: &F, x: &F::Obj) -> Result<Filling> {
    let r = rectify_class(fam, x)?;
    Ok(r.map[x].clone())
}

#[derive(Clone, Debug)]
pub struct WeakRectification<O: Ord> {
    pub shape: WeakComposition,
    pub anchor: O,
    pub map: BTreeMap<O, Filling>,
}

/// Weak rectification of the full class of `x`. The anchor is the member
/// whose weak descent `a` makes the class's nonvirtual weak descents equal
/// those of `SKT(a)`; it maps to the yamanouchi tableau and
/// `Ψ(ψ_i y) = d_i Ψ(y)` propagates. Weak descents must be preserved,
/// virtual ones included.
pub fn weak_rectify_class<F: WeakDescentStatistic>(
    fam: &F,
    x: &F::Obj,
    cache: &mut KeyDescentCache,
) -> Result<WeakRectification<F::Obj>> {
    let class = orbit(fam, x, 2, usize::MAX);
    let n = fam.degree(x);
    let des: Vec<WeakDescent> = class.iter().map(|u| fam.weak_descent(u)).collect();
    let real: Vec<WeakComposition> = des.iter().filter_map(|d| d.weak().cloned()).collect();
    let a = key_of_multiset(&real, cache)
        .ok_or_else(|| Error::Inconsistent(format!("class of {x} does not generate a key polynomial")))?;
    let target = WeakDescent::Weak(a.clone());
    let anchors: Vec<&F::Obj> = class.iter().zip(&des).filter(|(_, d)| **d == target).map(|(u, _)| u).collect();
    if anchors.len() != 1 {
        return Err(Error::Inconsistent(format!("class of {x} has {} yamanouchi members", anchors.len())));
    }
    let anchor = anchors[0].clone();
    let mut map: BTreeMap<F::Obj, Filling> = BTreeMap::new();
    map.insert(anchor.clone(), yamanouchi_key(&a));
    let mut queue = VecDeque::from([anchor.clone()]);
    while let Some(y) = queue.pop_front() {
        let img = map[&y].clone();
        for i in 2..n {
            let z = fam.apply(i, &y);
            let zi = img.skt_d(i)?;
            match map.get(&z) {
                Some(prev) if *prev != zi => {
                    return Err(Error::Inconsistent(format!("weak rectification of {z} is not well defined")))
                }
                Some(_) => {}
                None => {
                    map.insert(z.clone(), zi);
                    queue.push_back(z);
                }
            }
        }
    }
    let images: HashSet<&Filling> = map.values().collect();
    if images.len() != map.len() || map.len() != enumerate_skt(&a).len() {
        return Err(Error::Inconsistent(format!("class of {x} is not in bijection with SKT{a}")));
    }
    for (y, t) in &map {
        if fam.weak_descent(y) != t.weak_descent()? {
            return Err(Error::Inconsistent(format!("weak rectification of {y} changes weak descents")));
        }
    }
    Ok(WeakRectification { shape: a, anchor, map })
}

pub fn weak_rectify<F: WeakDescentStatistic>(fam: &F, x: &F::Obj) -> Result<Filling> {
    let r = weak_rectify_class(fam, x, &mut KeyDescentCache::default())?;
    Ok(r.map[x].clone())
}

/// A class summary for reports.
#[derive(Clone, Debug, Serialize)]
pub struct ClassReport {
    pub class_size: usize,
    pub des_list: Vec<String>,
    pub expansion: serde_json::Value,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// Plain-text graph of a class: one vertex per member, one edge per
/// nontrivial involution.
pub fn to_dot<F: InvolutionFamily>(fam: &F, class: &[F::Obj], name: &str) -> String {
    let idx: HashMap<&F::Obj, usize> = class.iter().enumerate().map(|(k, x)| (x, k)).collect();
    let mut s = format!("graph \"{name}\" {{\n");
    for (k, x) in class.iter().enumerate() {
        let label = x.to_string().replace('\\', "\\\\").replace('"', "\\\"").replace('\n', "\\n");
        s.push_str(&format!("  v{k} [label=\"{label}\"];\n"));
    }
    for (k, x) in class.iter().enumerate() {
        for i in 2..fam.degree(x) {
            let y = fam.apply(i, x);
            if let Some(&j) = idx.get(&y) {
                if k < j {
                    s.push_str(&format!("  v{k} -- v{j} [label=\"d{i}\"];\n"));
                }
            }
        }
    }
    s.push_str("}\n");
    s
}
