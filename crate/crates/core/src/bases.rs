//! Named polynomial families and the expansion and product rules built on
//! (weak) dual equivalence.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use serde_json::{json, Value};

use crate::dualequiv::{
    full_classes, rectify_class, weak_rectify_class, KeyDescentCache, KeyFamily, WeakDescentStatistic, WordFamily,
    WordWeakFamily, YoungFamily,
};
use crate::error::{Error, Result};
use crate::foundations::{
    expand_in_key, expand_in_schur, expand_in_slide, fundamental_f, fundamental_slide, Basis, BasisExpansion,
    Partition, Polynomial, StrongComposition, WeakComposition, WeakDescent,
};
use crate::permwords::{
    des_length, descent_composition, reduced_words, runs, stabilization_shift, weak_descent_of_runs, weak_descent_word,
    Permutation, ReducedWord,
};
use crate::tableaux::{
    enumerate, enumerate_product_skt, enumerate_qkt, enumerate_skew_skt, enumerate_skt, enumerate_syt, Filling, Shape,
};

/// A polynomial tagged with the family instance that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Schur { lambda: Partition, k: usize },
    Key { a: WeakComposition },
    Schubert { w: Permutation },
    Stanley { w: Permutation, nvars: usize },
    SkewKey { d: WeakComposition, a: WeakComposition },
    SkewSchur { lambda: Partition, mu: Partition, k: usize },
}

impl Family {
    /// JSON header recording the request.
    pub fn header(&self) -> Value {
        match self {
            Family::Schur { lambda, k } => json!({"family": "SCHUR", "lambda": lambda.parts(), "k": k}),
            Family::Key { a } => json!({"family": "KEY", "a": a.parts()}),
            Family::Schubert { w } => json!({"family": "SCHUBERT", "w": w.oneline()}),
            Family::Stanley { w, nvars } => json!({"family": "STANLEY", "w": w.oneline(), "nvars": nvars}),
            Family::SkewKey { d, a } => json!({"family": "SKEW_KEY", "d": d.parts(), "a": a.parts()}),
            Family::SkewSchur { lambda, mu, k } => {
                json!({"family": "SKEW_SCHUR", "lambda": lambda.parts(), "mu": mu.parts(), "k": k})
            }
        }
    }

    pub fn realize(&self) -> Result<Polynomial> {
        match self {
            Family::Schur { lambda, k } => schur_poly(lambda, *k),
            Family::Key { a } => Ok(key_poly(a)),
            Family::Schubert { w } => schubert_poly(w),
            Family::Stanley { w, nvars } => Ok(stanley_poly(w, *nvars)),
            Family::SkewKey { d, a } => skew_key_poly(d, a),
            Family::SkewSchur { lambda, mu, k } => skew_schur_poly(lambda, mu, *k),
        }
    }
}

fn slide_sum<'a, I: IntoIterator<Item = &'a WeakDescent>>(nvars: usize, des: I) -> Result<BasisExpansion> {
    let mut e = BasisExpansion::new(Basis::Slide);
    for d in des {
        if let WeakDescent::Weak(a) = d {
            if a.len() != nvars {
                return Err(Error::LengthMismatch(a.len(), nvars));
            }
            e.add(a.0.clone(), 1)?;
        }
    }
    Ok(e)
}

fn realize_slides(e: &BasisExpansion, nvars: usize) -> Result<Polynomial> {
    let mut p = Polynomial::zero(nvars);
    for (k, c) in e.terms() {
        p.add_scaled(&fundamental_slide(&WeakComposition(k.clone())), *c)?;
    }
    Ok(p)
}

fn key_cache() -> &'static Mutex<HashMap<WeakComposition, Polynomial>> {
    static CACHE: OnceLock<Mutex<HashMap<WeakComposition, Polynomial>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Slide expansion of `κ_a` from standard key tableaux.
pub fn key_slide_expansion(a: &WeakComposition) -> BasisExpansion {
    let des: Vec<WeakDescent> = enumerate_skt(a).iter().map(|t| t.weak_descent().expect("key shape")).collect();
    slide_sum(a.len(), &des).expect("weak descents have the shape's length")
}

/// Slide expansion of `κ_a` from quasi-Yamanouchi Kohnert tableaux.
pub fn key_slide_expansion_qkt(a: &WeakComposition) -> BasisExpansion {
    let wts: Vec<WeakDescent> = enumerate_qkt(a).iter().map(|d| d.weight()).collect();
    slide_sum(a.len(), &wts).expect("weights have the shape's length")
}

/// `κ_a` in `len(a)` variables, memoized.
pub fn key_poly(a: &WeakComposition) -> Polynomial {
    if let Some(p) = key_cache().lock().expect("key cache").get(a) {
        return p.clone();
    }
    let p = realize_slides(&key_slide_expansion(a), a.len()).expect("key coefficients fit");
    key_cache().lock().expect("key cache").insert(a.clone(), p.clone());
    p
}

pub fn key_poly_qkt(a: &WeakComposition) -> Polynomial {
    realize_slides(&key_slide_expansion_qkt(a), a.len()).expect("key coefficients fit")
}

/// `s_λ(x_1, …, x_k)` as the key polynomial of the increasing rearrangement.
pub fn schur_poly(lambda: &Partition, k: usize) -> Result<Polynomial> {
    if lambda.len() > k {
        return Ok(Polynomial::zero(k));
    }
    Ok(key_poly(&lambda.increasing_composition(k)?))
}

/// `s_λ(x_1, …, x_k)` as the F-generating function of `SYT(λ)`.
pub fn schur_poly_syt(lambda: &Partition, k: usize) -> Result<Polynomial> {
    let mut p = Polynomial::zero(k);
    for t in enumerate_syt(lambda) {
        p.add_scaled(&fundamental_f(&t.descent_composition(), k), 1)?;
    }
    Ok(p)
}

/// `S_w = Σ F_{Des(ρ)}` over all reduced words.
pub fn stanley_f_expansion(w: &Permutation) -> BasisExpansion {
    let mut e = BasisExpansion::new(Basis::FundamentalF);
    for r in reduced_words(w) {
        e.add(descent_composition(&r).parts().to_vec(), 1).expect("counts fit");
    }
    e
}

pub fn stanley_poly(w: &Permutation, nvars: usize) -> Polynomial {
    let mut p = Polynomial::zero(nvars);
    for (k, c) in stanley_f_expansion(w).terms() {
        let alpha = StrongComposition::new(k.clone()).expect("descent compositions are strong");
        p.add_scaled(&fundamental_f(&alpha, nvars), *c).expect("counts fit");
    }
    p
}

/// Number of variables that sees every Schur term of an F-expansion: no
/// `s_λ` can have more parts than the longest index present.
fn schur_nvars(e: &BasisExpansion) -> usize {
    e.terms().keys().map(|k| k.len()).max().unwrap_or(0).max(1)
}

fn check_equal(what: &str, got: &BasisExpansion, want: &BasisExpansion) -> Result<()> {
    if got != want {
        return Err(Error::Inconsistent(format!("{what}: combinatorial {got} but oracle {want}")));
    }
    Ok(())
}

fn check_nonnegative(what: &str, e: &BasisExpansion) -> Result<()> {
    if !e.is_nonnegative() {
        return Err(Error::Negative(format!("{what}: {e}")));
    }
    Ok(())
}

/// Schur expansion of `S_w`: each dual equivalence class of reduced words
/// rectifies onto `SYT(λ)` and contributes `s_λ`. Cross-checked against the
/// triangular expansion of the realized polynomial.
pub fn stanley_schur_expansion(w: &Permutation) -> Result<BasisExpansion> {
    let words = reduced_words(w);
    let mut out = BasisExpansion::new(Basis::Schur);
    for class in full_classes(&WordFamily, &words) {
        let r = rectify_class(&WordFamily, &class[0])?;
        out.add(r.shape.parts().to_vec(), 1)?;
    }
    let fexp = stanley_f_expansion(w);
    let oracle = expand_in_schur(&stanley_poly(w, schur_nvars(&fexp)))?;
    check_equal("Stanley Schur expansion", &out, &oracle)?;
    Ok(out)
}

/// `𝔖_w = Σ 𝔉_{des(ρ)}` over nonvirtual reduced words, in `n - 1` variables.
pub fn schubert_slide_expansion(w: &Permutation) -> BasisExpansion {
    let len = des_length(w);
    let des: Vec<WeakDescent> =
        reduced_words(w).iter().map(|r| weak_descent_word(r, len).expect("rows of reduced words fit")).collect();
    slide_sum(len, &des).expect("weak descents have length n - 1")
}

pub fn schubert_poly(w: &Permutation) -> Result<Polynomial> {
    realize_slides(&schubert_slide_expansion(w), des_length(w))
}

/// Key expansion of `𝔖_w`. Reduced words are shifted by the stabilization
/// shift `m` so that none is virtual, each weak dual equivalence class
/// rectifies onto `SKT(0^m × a)` and contributes `κ_a`. Cross-checked
/// against the triangular expansion; every coefficient must be positive.
pub fn schubert_key_expansion(w: &Permutation) -> Result<BasisExpansion> {
    let m = stabilization_shift(w);
    let len = des_length(w);
    let words: Vec<ReducedWord> = reduced_words(w).iter().map(|r| r.shifted(m as u32)).collect();
    let fam = WordWeakFamily { length: len + m };
    let mut cache = KeyDescentCache::default();
    let mut out = BasisExpansion::new(Basis::Key);
    for class in full_classes(&fam, &words) {
        let r = weak_rectify_class(&fam, &class[0], &mut cache)?;
        let (head, tail) = r.shape.parts().split_at(m);
        if head.iter().any(|&x| x != 0) {
            return Err(Error::Inconsistent(format!("class shape {} is not shifted by {m}", r.shape)));
        }
        out.add(tail.to_vec(), 1)?;
    }
    let oracle = expand_in_key(&schubert_poly(w)?)?;
    check_equal("Schubert key expansion", &out, &oracle)?;
    check_nonnegative("Schubert key expansion", &out)?;
    Ok(out)
}

/// `κ_{d/a} = Σ 𝔉_{des(T)}` over skew standard key tableaux.
pub fn skew_key_slide_expansion(d: &WeakComposition, a: &WeakComposition) -> Result<BasisExpansion> {
    let des: Vec<WeakDescent> = enumerate_skew_skt(d, a)?.iter().map(|t| t.weak_descent()).collect::<Result<_>>()?;
    slide_sum(d.len(), &des)
}

pub fn skew_key_poly(d: &WeakComposition, a: &WeakComposition) -> Result<Polynomial> {
    realize_slides(&skew_key_slide_expansion(d, a)?, d.len())
}

/// Possibly signed key expansion of `κ_{d/a}` for any inner shape.
pub fn skew_key_key_expansion(d: &WeakComposition, a: &WeakComposition) -> Result<BasisExpansion> {
    expand_in_key(&skew_key_poly(d, a)?)
}

fn count_weak_classes(tableaux: &[Filling]) -> Result<BasisExpansion> {
    let mut cache = KeyDescentCache::default();
    let mut out = BasisExpansion::new(Basis::Key);
    for class in full_classes(&KeyFamily, tableaux) {
        // a class of virtual tableaux generates 0
        if class.iter().all(|t| KeyFamily.weak_descent(t).is_virtual()) {
            continue;
        }
        let r = weak_rectify_class(&KeyFamily, &class[0], &mut cache)?;
        out.add(r.shape.0, 1)?;
    }
    Ok(out)
}

fn count_classes(tableaux: &[Filling]) -> Result<BasisExpansion> {
    let mut out = BasisExpansion::new(Basis::Schur);
    for class in full_classes(&YoungFamily, tableaux) {
        let r = rectify_class(&YoungFamily, &class[0])?;
        out.add(r.shape.parts().to_vec(), 1)?;
    }
    Ok(out)
}

/// Key expansion of `κ_{d/a_λ}` with the weakly increasing inner shape
/// `a_λ` of length `len(d)`, by counting weak dual equivalence classes.
pub fn skew_key_expansion(d: &WeakComposition, lambda: &Partition) -> Result<BasisExpansion> {
    let a = lambda.increasing_composition(d.len())?;
    let out = count_weak_classes(&enumerate_skew_skt(d, &a)?)?;
    check_equal("skew key expansion", &out, &skew_key_key_expansion(d, &a)?)?;
    check_nonnegative("skew key expansion", &out)?;
    Ok(out)
}

/// `s_{λ/μ}(x_1, …, x_k)` as the F-generating function of skew SYT.
pub fn skew_schur_poly(lambda: &Partition, mu: &Partition, k: usize) -> Result<Polynomial> {
    let mut p = Polynomial::zero(k);
    for t in enumerate(&Shape::skew_young(lambda.clone(), mu.clone())?) {
        p.add_scaled(&fundamental_f(&t.descent_composition(), k), 1)?;
    }
    Ok(p)
}

fn young_oracle(shape: &Shape, n: usize) -> Result<BasisExpansion> {
    let mut p = Polynomial::zero(n.max(1));
    for t in enumerate(shape) {
        p.add_scaled(&fundamental_f(&t.descent_composition(), n.max(1)), 1)?;
    }
    expand_in_schur(&p)
}

/// `s_{λ/μ} = Σ c^λ_{μν} s_ν`, one term per dual equivalence class of
/// skew standard Young tableaux.
pub fn skew_schur_expansion(lambda: &Partition, mu: &Partition) -> Result<BasisExpansion> {
    let shape = Shape::skew_young(lambda.clone(), mu.clone())?;
    let out = count_classes(&enumerate(&shape))?;
    let n = (lambda.size() - mu.size()) as usize;
    check_equal("skew Schur expansion", &out, &young_oracle(&shape, n)?)?;
    Ok(out)
}

/// `s_μ s_ν = Σ c^λ_{μν} s_λ`, one term per class of standard fillings of
/// the product shape `μ ⊗ ν`.
pub fn lr_coefficients(mu: &Partition, nu: &Partition) -> Result<BasisExpansion> {
    let shape = Shape::YoungProduct(mu.clone(), nu.clone());
    let out = count_classes(&enumerate(&shape))?;
    let n = (mu.size() + nu.size()) as usize;
    check_equal("Littlewood-Richardson expansion", &out, &young_oracle(&shape, n)?)?;
    Ok(out)
}

/// `κ_b · s_λ(x_1, …, x_n)` as a positive sum of keys: classes of standard
/// key tableaux of shape `b ⊗ a(λ, n)`, partition factor on the right.
pub fn key_times_schur(b: &WeakComposition, lambda: &Partition, n: usize) -> Result<BasisExpansion> {
    if b.len() != n {
        return Err(Error::LengthMismatch(b.len(), n));
    }
    let a = lambda.increasing_composition(n)?;
    let out = count_weak_classes(&enumerate_product_skt(b, &a)?)?;
    let oracle = expand_in_key(&key_poly(b).mul(&schur_poly(lambda, n)?)?)?;
    check_equal("key times Schur expansion", &out, &oracle)?;
    check_nonnegative("key times Schur expansion", &out)?;
    Ok(out)
}

/// `κ_a κ_b = Σ 𝔉_{des(T)}` over standard key tableaux of shape `a ⊗ b`,
/// with the weak descent that follows the shuffle of the two factors.
pub fn key_product_slide_model(a: &WeakComposition, b: &WeakComposition) -> Result<BasisExpansion> {
    let des: Vec<WeakDescent> =
        enumerate_product_skt(a, b)?.iter().map(|t| t.shuffle_weak_descent()).collect::<Result<_>>()?;
    let out = slide_sum(a.len(), &des)?;
    let oracle = expand_in_slide(&key_poly(a).mul(&key_poly(b))?)?;
    check_equal("key product slide expansion", &out, &oracle)?;
    Ok(out)
}

/// Signed key expansion of `κ_a κ_b`, via the product slide model.
pub fn key_product_key_expansion(a: &WeakComposition, b: &WeakComposition) -> Result<BasisExpansion> {
    let slides = key_product_slide_model(a, b)?;
    expand_in_key(&realize_slides(&slides, a.len())?)
}

/// The product tableau of `(T, U)` and a word over `{A, B}`: entries of `T`
/// are relabeled, in order, by the positions holding `A` and entries of `U`
/// by those holding `B`, positions counted from the right end of the word.
pub fn product_from_shuffle(t: &Filling, u: &Filling, word: &str) -> Result<Filling> {
    let (Shape::Key(a), Shape::Key(b)) = (t.shape(), u.shape()) else {
        return Err(Error::Invalid("both factors must be straight key tableaux".into()));
    };
    let letters: Vec<char> = word.chars().rev().collect();
    let pos = |c: char| -> Vec<u32> {
        letters.iter().enumerate().filter(|(_, &x)| x == c).map(|(k, _)| k as u32 + 1).collect()
    };
    let (pa, pb) = (pos('A'), pos('B'));
    if pa.len() != t.n() || pb.len() != u.n() || pa.len() + pb.len() != letters.len() {
        return Err(Error::Invalid(format!("word {word:?} does not match the factor sizes")));
    }
    let shape = Shape::key_product(a.clone(), b.clone())?;
    Filling::from_fn(shape, |c| {
        let inner = crate::tableaux::Cell { factor: 0, ..*c };
        if c.factor == 0 {
            pa[t.at(&inner).flatten().expect("cell of T") as usize - 1]
        } else {
            pb[u.at(&inner).flatten().expect("cell of U") as usize - 1]
        }
    })
}

/// Witness words for the shuffle product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShuffleWitness {
    /// Descending plateaus, the second word on the higher alphabet.
    Plateaus,
    /// Strictly increasing consecutive blocks, the first word on the higher
    /// alphabet.
    Blocks,
}

fn plateau_word(alpha: &StrongComposition, top: u32) -> Vec<u32> {
    let k = alpha.len() as u32;
    alpha.parts().iter().enumerate().flat_map(|(j, &p)| std::iter::repeat_n(top + k - j as u32, p as usize)).collect()
}

fn block_word(alpha: &StrongComposition, base: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut start = base + alpha.size();
    for &p in alpha.parts() {
        start -= p;
        out.extend(start + 1..=start + p);
    }
    out
}

/// Lengths of the weakly increasing runs, read left to right.
fn run_composition(word: &[u32]) -> StrongComposition {
    let lens: Vec<u32> = runs(word, false).blocks.iter().map(|b| b.len() as u32).collect();
    StrongComposition::new(lens).expect("runs are nonempty")
}

/// Calls `f` on every interleaving of `a` and `b`.
pub fn for_each_shuffle<F: FnMut(&[u32])>(a: &[u32], b: &[u32], mut f: F) {
    fn rec<F: FnMut(&[u32])>(a: &[u32], b: &[u32], cur: &mut Vec<u32>, f: &mut F) {
        if a.is_empty() && b.is_empty() {
            f(cur);
            return;
        }
        if let Some((&x, rest)) = a.split_first() {
            cur.push(x);
            rec(rest, b, cur, f);
            cur.pop();
        }
        if let Some((&x, rest)) = b.split_first() {
            cur.push(x);
            rec(a, rest, cur, f);
            cur.pop();
        }
    }
    rec(a, b, &mut Vec::with_capacity(a.len() + b.len()), &mut f);
}

pub fn shuffle_witnesses(
    alpha: &StrongComposition,
    beta: &StrongComposition,
    w: ShuffleWitness,
) -> (Vec<u32>, Vec<u32>) {
    match w {
        ShuffleWitness::Plateaus => (plateau_word(alpha, 0), plateau_word(beta, alpha.len() as u32)),
        ShuffleWitness::Blocks => (block_word(alpha, beta.size()), block_word(beta, 0)),
    }
}

pub fn shuffle_product_with(
    alpha: &StrongComposition,
    beta: &StrongComposition,
    witness: ShuffleWitness,
) -> Result<BasisExpansion> {
    let (a, b) = shuffle_witnesses(alpha, beta, witness);
    debug_assert_eq!(run_composition(&a), *alpha);
    let mut out = BasisExpansion::new(Basis::FundamentalF);
    let mut err = None;
    for_each_shuffle(&a, &b, |c| {
        if err.is_none() {
            err = out.add(run_composition(c).parts().to_vec(), 1).err();
        }
    });
    err.map_or(Ok(out), Err)
}

/// `F_α F_β` as a sum of fundamental quasisymmetric functions; both witness
/// choices are computed and must agree.
pub fn shuffle_product(alpha: &StrongComposition, beta: &StrongComposition) -> Result<BasisExpansion> {
    let p = shuffle_product_with(alpha, beta, ShuffleWitness::Plateaus)?;
    let q = shuffle_product_with(alpha, beta, ShuffleWitness::Blocks)?;
    check_equal("shuffle product witnesses", &p, &q)?;
    Ok(p)
}

/// Weak descent of a word in the slide product alphabet: weakly increasing
/// runs, each placed at row `⌈first letter / 2⌉` or just below the row of
/// the run to its left.
pub fn slide_word_descent(word: &[u32], length: usize) -> Result<WeakDescent> {
    let rd = runs(word, false);
    weak_descent_of_runs(&rd.blocks, length, |l| l.div_ceil(2) as i64)
}

/// Witness words for `𝔉_a` and `𝔉_b`: rows from the top down, row `r` of
/// `a` contributing `a_r` copies of `2r - 1` and of `b` contributing `b_r`
/// copies of `2r`, so that each word's own weak descent is `a` (resp. `b`).
pub fn slide_witnesses(a: &WeakComposition, b: &WeakComposition) -> (Vec<u32>, Vec<u32>) {
    let word = |c: &WeakComposition, odd: bool| -> Vec<u32> {
        (1..=c.len())
            .rev()
            .flat_map(|r| {
                let letter = 2 * r as u32 - odd as u32;
                std::iter::repeat_n(letter, c.parts()[r - 1] as usize)
            })
            .collect()
    };
    (word(a, true), word(b, false))
}

/// `𝔉_a 𝔉_b` by the slide product; virtual shuffles contribute nothing.
/// Cross-checked against the triangular expansion of the product.
pub fn slide_product(a: &WeakComposition, b: &WeakComposition) -> Result<BasisExpansion> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch(a.len(), b.len()));
    }
    let n = a.len();
    let (wa, wb) = slide_witnesses(a, b);
    let mut out = BasisExpansion::new(Basis::Slide);
    let mut err: Option<Error> = None;
    for_each_shuffle(&wa, &wb, |c| {
        if err.is_some() {
            return;
        }
        match slide_word_descent(c, n) {
            Ok(WeakDescent::Weak(d)) => err = out.add(d.0, 1).err(),
            Ok(WeakDescent::Virtual) => {}
            Err(e) => err = Some(e),
        }
    });
    if let Some(e) = err {
        return Err(e);
    }
    let oracle = expand_in_slide(&fundamental_slide(a).mul(&fundamental_slide(b))?)?;
    check_equal("slide product", &out, &oracle)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wc(s: &str) -> WeakComposition {
        s.parse().unwrap()
    }

    fn sc(s: &str) -> StrongComposition {
        s.parse().unwrap()
    }

    #[test]
    fn fig_key_slide_expansion() {
        let e = key_slide_expansion(&wc("0,3,0,2"));
        assert_eq!(e.len(), 4);
        for k in ["0,3,0,2", "2,2,0,1", "1,3,0,1", "2,3,0,0"] {
            assert_eq!(e.coef(wc(k).parts()), 1);
        }
        assert_eq!(key_slide_expansion_qkt(&wc("0,3,0,2")), e);
    }

    #[test]
    fn schubert_keys_of_fig_permutation() {
        let w: Permutation = "42153".parse().unwrap();
        let e = schubert_key_expansion(&w).unwrap();
        assert_eq!(e.to_string(), "1*key(3,1,0,1) + 1*key(3,2,0,0)");
    }

    #[test]
    fn stanley_schur_of_fig_permutation() {
        let w: Permutation = "42153".parse().unwrap();
        assert_eq!(stanley_schur_expansion(&w).unwrap().to_string(), "1*s(3,1,1) + 1*s(3,2)");
    }

    #[test]
    fn shuffle_example() {
        let e = shuffle_product(&sc("2,3"), &sc("2,1")).unwrap();
        assert_eq!(e.coef(&[3, 2, 3]), 2);
        assert_eq!(e.mass(), 56);
    }

    #[test]
    fn slide_words() {
        assert_eq!(slide_word_descent(&[5, 6, 6, 4, 5, 1, 1, 1], 3).unwrap().to_string(), "(3,2,3)");
        assert!(slide_word_descent(&[5, 5, 6, 1, 6, 1, 1, 4], 3).unwrap().is_virtual());
        let (a, b) = slide_witnesses(&wc("2,0,3"), &wc("0,2,1"));
        assert_eq!(slide_word_descent(&a, 3).unwrap().to_string(), "(2,0,3)");
        assert_eq!(slide_word_descent(&b, 3).unwrap().to_string(), "(0,2,1)");
    }

    #[test]
    fn slide_product_example() {
        let e = slide_product(&wc("2,0,3"), &wc("0,2,1")).unwrap();
        assert_eq!(e.len(), 12);
        assert!(e.terms().values().all(|&c| c == 1));
    }
}
