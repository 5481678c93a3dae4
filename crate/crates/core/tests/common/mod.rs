//! Checks shared by the acceptance target and the topic suites. Each check
//! returns `Err` with a readable reason instead of panicking, so that the
//! acceptance target can print one line per criterion.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap};

use schubkey::bases::*;
use schubkey::dualequiv::*;
use schubkey::foundations::*;
use schubkey::oracle::*;
use schubkey::permwords::*;
use schubkey::tableaux::*;

pub type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn e<E: std::fmt::Display>(err: E) -> String {
    err.to_string()
}

pub fn wc(s: &str) -> WeakComposition {
    s.parse().expect("weak composition")
}

pub fn sc(s: &str) -> StrongComposition {
    s.parse().expect("strong composition")
}

pub fn pt(s: &str) -> Partition {
    s.parse().expect("partition")
}

pub fn perm(s: &str) -> Permutation {
    s.parse().expect("permutation")
}

pub fn expansion(basis: Basis, terms: &[(&str, Coef)]) -> BasisExpansion {
    BasisExpansion::from_terms(
        basis,
        terms.iter().map(|(k, c)| (k.split(',').filter(|s| !s.is_empty()).map(|x| x.parse().unwrap()).collect(), *c)),
    )
    .expect("expansion")
}

fn same(what: &str, got: &BasisExpansion, want: &BasisExpansion) -> Check {
    ensure!(got == want, "{what}: got {got}, expected {want}");
    Ok(())
}

pub type Named = (&'static str, fn() -> Check);

/// Runs named checks, stopping at the first failure.
pub fn run_all(checks: &[Named]) -> Check {
    for (name, f) in checks {
        f().map_err(|m| format!("{name}: {m}"))?;
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// golden identities

pub fn golden_schubert_keys() -> Check {
    let got = schubert_key_expansion(&perm("42153")).map_err(e)?;
    same("S_42153 keys", &got, &expansion(Basis::Key, &[("3,1,0,1", 1), ("3,2,0,0", 1)]))?;
    ensure!(got.to_string() == "1*key(3,1,0,1) + 1*key(3,2,0,0)", "text form {got}");
    Ok(())
}

pub fn golden_stanley_schur() -> Check {
    let got = stanley_schur_expansion(&perm("42153")).map_err(e)?;
    same("S_42153 Schur", &got, &expansion(Basis::Schur, &[("3,2", 1), ("3,1,1", 1)]))
}

pub fn golden_stanley_f() -> Check {
    let want = expansion(
        Basis::FundamentalF,
        &[("3,1,1", 1), ("2,2,1", 2), ("1,3,1", 2), ("3,2", 1), ("1,2,2", 2), ("1,1,3", 1), ("2,1,2", 1), ("2,3", 1)],
    );
    same("S_42153 F-expansion", &stanley_f_expansion(&perm("42153")), &want)
}

pub fn golden_schubert_slides() -> Check {
    let want = expansion(
        Basis::Slide,
        &[
            ("0,3,1,0,1", 1),
            ("2,2,0,0,1", 1),
            ("1,3,0,0,1", 1),
            ("0,3,2,0,0", 1),
            ("2,2,1,0,0", 1),
            ("1,3,1,0,0", 1),
            ("2,3,0,0,0", 1),
        ],
    );
    same("S_153264 slides", &schubert_slide_expansion(&perm("153264")), &want)
}

pub fn golden_key_slides() -> Check {
    let want = expansion(Basis::Slide, &[("0,3,0,2", 1), ("2,2,0,1", 1), ("1,3,0,1", 1), ("2,3,0,0", 1)]);
    same("key(0,3,0,2) via SKT", &key_slide_expansion(&wc("0,3,0,2")), &want)?;
    same("key(0,3,0,2) via QKT", &key_slide_expansion_qkt(&wc("0,3,0,2")), &want)
}

pub fn golden_skew_key() -> Check {
    let got = skew_key_expansion(&wc("3,2,3"), &pt("2,1")).map_err(e)?;
    same("key(3,2,3)/(0,1,2)", &got, &expansion(Basis::Key, &[("3,1,1", 1), ("3,2,0", 1)]))
}

pub fn golden_signed_skew_key() -> Check {
    let want = expansion(
        Basis::Key,
        &[
            ("0,2,0,2", 1),
            ("1,1,0,2", 1),
            ("0,1,2,1", 1),
            ("0,2,1,1", -1),
            ("1,2,0,1", -1),
            ("1,1,2,0", -1),
            ("1,2,1,0", 1),
        ],
    );
    let got = skew_key_key_expansion(&wc("0,2,1,2"), &wc("0,1,0,0")).map_err(e)?;
    same("key(0,2,1,2)/(0,1,0,0)", &got, &want)?;
    let slides = skew_key_slide_expansion(&wc("0,2,1,2"), &wc("0,1,0,0")).map_err(e)?;
    let nonvirtual = expansion(Basis::Slide, &[("1,1,0,2", 1), ("0,2,0,2", 1), ("0,1,2,1", 1)]);
    same("skew key nonvirtual descents", &slides, &nonvirtual)
}

pub fn golden_key_products() -> Check {
    let want = expansion(
        Basis::Key,
        &[("0,3,1,1", 1), ("0,3,2,0", 1), ("1,2,1,1", 1), ("1,2,2,0", 1), ("2,2,0,1", 1), ("2,2,1,0", -1)],
    );
    let got = key_product_key_expansion(&wc("0,2,1,0"), &wc("0,1,0,1")).map_err(e)?;
    same("key(0,2,1,0) key(0,1,0,1)", &got, &want)?;
    let want = expansion(Basis::Key, &[("0,3,1,1", 1), ("1,2,1,1", 1), ("0,3,2,0", 1), ("0,2,2,1", 1)]);
    let got = key_times_schur(&wc("0,2,1,0"), &pt("1,1"), 4).map_err(e)?;
    same("key(0,2,1,0) key(0,0,1,1)", &got, &want)
}

pub fn golden_slide_product() -> Check {
    let want = expansion(
        Basis::Slide,
        &[
            ("2,2,4", 1),
            ("2,3,3", 1),
            ("2,4,2", 1),
            ("2,5,1", 1),
            ("3,1,4", 1),
            ("3,2,3", 1),
            ("3,3,2", 1),
            ("3,4,1", 1),
            ("4,0,4", 1),
            ("4,1,3", 1),
            ("4,2,2", 1),
            ("4,3,1", 1),
        ],
    );
    same("slide(2,0,3) slide(0,2,1)", &slide_product(&wc("2,0,3"), &wc("0,2,1")).map_err(e)?, &want)?;
    let d = slide_word_descent(&[5, 6, 6, 4, 5, 1, 1, 1], 3).map_err(e)?;
    ensure!(d == WeakDescent::Weak(wc("3,2,3")), "des(56645111) = {d}");
    let d = slide_word_descent(&[5, 5, 6, 1, 6, 1, 1, 4], 3).map_err(e)?;
    ensure!(d.is_virtual(), "des(55616114) = {d}");
    Ok(())
}

/// `s_{11}(x_1..x_3) s_1(x_1,x_2)`, with `s_1(x_1,x_2) = κ_{(0,1,0)}` once
/// padded to three variables.
pub fn golden_key_times_schur_small() -> Check {
    let got = key_times_schur(&wc("0,1,0"), &pt("1,1"), 3).map_err(e)?;
    same("s_11 s_1", &got, &expansion(Basis::Key, &[("1,1,1", 1), ("0,2,1", 1)]))?;
    let lhs = schur_poly(&pt("1,1"), 3).map_err(e)?.mul(&schur_poly(&pt("1"), 2).map_err(e)?.padded(3).map_err(e)?);
    let rhs = got.realize(3).map_err(e)?;
    ensure!(lhs.map_err(e)? == rhs, "polynomial identity fails");
    Ok(())
}

pub fn golden_skew_schur() -> Check {
    let got = skew_schur_expansion(&pt("3,3,2"), &pt("2,1")).map_err(e)?;
    same("s_(332)/(21)", &got, &expansion(Basis::Schur, &[("3,1,1", 1), ("3,2", 1), ("2,2,1", 1)]))
}

pub fn golden_reduced_words() -> Check {
    let want: BTreeSet<Vec<u32>> =
        ["42123", "41213", "41231", "24123", "21423", "21243", "14231", "12431", "14213", "12413", "12143"]
            .iter()
            .map(|s| s.bytes().map(|b| (b - b'0') as u32).collect())
            .collect();
    let got: Vec<Vec<u32>> = reduced_words(&perm("42153")).into_iter().map(|r| r.0).collect();
    ensure!(got.len() == 11, "{} reduced words", got.len());
    ensure!(got.iter().cloned().collect::<BTreeSet<_>>() == want, "word set {got:?}");
    Ok(())
}

/// The shuffle-to-product bijection on the four-row shapes.
pub fn golden_product_bijection() -> Check {
    let t = Filling::parse(Shape::Key(wc("0,2,0,3")), "5 4 1//3 2/").map_err(e)?;
    let u = Filling::parse(Shape::Key(wc("0,0,2,1")), "1/3 2//").map_err(e)?;
    let p = product_from_shuffle(&t, &u, "AABABAAB").map_err(e)?;
    let want = Filling::parse(Shape::key_product(wc("0,2,0,3"), wc("0,0,2,1")).map_err(e)?, "8 7 2|1/|6 4/5 3|/|")
        .map_err(e)?;
    ensure!(p == want, "product tableau\n{p}");
    ensure!(p.is_standard_key(), "not a standard key tableau");
    let d = p.weak_descent().map_err(e)?;
    ensure!(d == WeakDescent::Weak(wc("3,2,3,0")), "des = {d}");
    ensure!(p.run_decomposition().to_string() == "(876|54|321)", "runs {}", p.run_decomposition());
    Ok(())
}

pub fn golden_grassmannian() -> Check {
    let lambda = pt("5,4,4,1");
    let v = grassmannian(&lambda, 6).map_err(e)?;
    let p = schubert_poly(&v).map_err(e)?;
    let s = schur_poly(&lambda, 6).map_err(e)?.padded(p.nvars()).map_err(e)?;
    ensure!(p == s, "S_v(5441,6) differs from s_5441");
    Ok(())
}

pub fn criterion_golden() -> Check {
    run_all(&[
        ("Schubert key expansion", golden_schubert_keys),
        ("Stanley Schur expansion", golden_stanley_schur),
        ("Stanley F-expansion", golden_stanley_f),
        ("Schubert slide expansion", golden_schubert_slides),
        ("key slide expansion", golden_key_slides),
        ("skew key expansion", golden_skew_key),
        ("signed skew key expansion", golden_signed_skew_key),
        ("key products", golden_key_products),
        ("slide product", golden_slide_product),
        ("Schur times key", golden_key_times_schur_small),
        ("skew Schur expansion", golden_skew_schur),
        ("reduced words", golden_reduced_words),
        ("product bijection", golden_product_bijection),
        ("grassmannian Schubert", golden_grassmannian),
    ])
}

// ---------------------------------------------------------------------------
// oracle equivalence

pub fn small_permutations() -> Vec<Permutation> {
    let mut out = Permutation::all(4);
    out.extend(Permutation::all(5));
    out
}

pub fn key_shapes(max_size: u32, max_len: usize) -> Vec<WeakComposition> {
    let mut out = Vec::new();
    for len in 1..=max_len {
        for total in 0..=max_size {
            out.extend(weak_compositions(total, len));
        }
    }
    out
}

pub fn schubert_oracle(w: &Permutation) -> Check {
    let nvars = w.len().saturating_sub(1).max(1);
    let combinatorial = schubert_poly(w).map_err(e)?.padded(nvars).map_err(e)?;
    let oracle = schubert_divided_difference(w).map_err(e)?.padded(nvars).map_err(e)?;
    ensure!(combinatorial == oracle, "S_{w}: slide model differs from divided differences");
    let keys = schubert_key_expansion(w).map_err(e)?;
    let triangular = expand_in_key(&oracle).map_err(e)?;
    let mut padded = BasisExpansion::new(Basis::Key);
    for (k, c) in keys.terms() {
        let mut k = k.clone();
        k.resize(nvars, 0);
        padded.add(k, *c).map_err(e)?;
    }
    same(&format!("S_{w} keys"), &padded, &triangular)?;
    ensure!(keys.is_nonnegative(), "S_{w} keys not positive: {keys}");
    Ok(())
}

pub fn key_oracle(a: &WeakComposition) -> Check {
    let skt = key_slide_expansion(a);
    let qkt = key_slide_expansion_qkt(a);
    same(&format!("key{a} slides"), &skt, &qkt)?;
    let p = skt.realize(a.len()).map_err(e)?;
    ensure!(p == key_poly(a), "key{a}: realized slides differ from key_poly");
    ensure!(p == key_poly_qkt(a), "key{a}: SKT and QKT polynomials differ");
    ensure!(p == key_poly_kohnert(a), "key{a}: differs from Kohnert diagrams");
    Ok(())
}

pub fn criterion_oracles() -> Check {
    for w in small_permutations() {
        schubert_oracle(&w)?;
    }
    for a in key_shapes(6, 4) {
        key_oracle(&a)?;
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// bijections and involutions

pub fn ascend_descend(a: &WeakComposition) -> Check {
    let qkt = enumerate_qkt(a);
    let skt = enumerate_skt(a);
    ensure!(qkt.len() == skt.len(), "shape {a}: {} QKT vs {} SKT", qkt.len(), skt.len());
    let skt_set: BTreeSet<&Filling> = skt.iter().collect();
    for d in &qkt {
        let t = ascend(d).map_err(e)?;
        ensure!(skt_set.contains(&t), "ascend of\n{d}\nis not in SKT{a}");
        ensure!(&descend(&t).map_err(e)? == d, "descend(ascend(D)) != D for\n{d}");
        ensure!(t.weak_descent().map_err(e)? == d.weight(), "weight and des disagree on\n{d}");
    }
    for t in &skt {
        let d = descend(t).map_err(e)?;
        ensure!(d.is_kohnert() && d.is_quasi_yamanouchi(), "descend of\n{t}\nis not a QKT");
        ensure!(&ascend(&d).map_err(e)? == t, "ascend(descend(T)) != T for\n{t}");
    }
    Ok(())
}

/// Involution, carrier and far-commutation checks for `d` on `carrier`.
pub fn involution_suite<T, D>(carrier: &[T], degree: usize, d: D) -> Check
where
    T: Ord + Clone + std::fmt::Display,
    D: Fn(usize, &T) -> T,
{
    let members: BTreeSet<&T> = carrier.iter().collect();
    for x in carrier {
        for i in 2..degree {
            let y = d(i, x);
            ensure!(members.contains(&y), "d_{i}({x}) = {y} leaves the carrier");
            ensure!(d(i, &y) == *x, "d_{i} is not an involution at {x}");
            for j in i + 3..degree {
                ensure!(d(j, &y) == d(i, &d(j, x)), "d_{i}, d_{j} do not commute at {x}");
            }
        }
    }
    Ok(())
}

pub fn haiman_suite(max: u32) -> Check {
    for n in 1..=max {
        for lambda in Partition::all_of(n) {
            let syt = enumerate_syt(&lambda);
            involution_suite(&syt, n as usize, |i, t: &Filling| t.haiman_d(i).expect("haiman"))?;
        }
    }
    Ok(())
}

pub fn word_suite() -> Check {
    for w in small_permutations() {
        let words = reduced_words(&w);
        involution_suite(&words, w.inv(), |i, r: &ReducedWord| word_d(i, r).expect("word involution"))?;
    }
    Ok(())
}

pub fn skt_suite(a: &WeakComposition) -> Check {
    let skt = enumerate_skt(a);
    involution_suite(&skt, a.size() as usize, |i, t: &Filling| t.skt_d(i).expect("skt involution"))?;
    // flattening intertwines the key involutions with the reversed Young ones
    let n = a.size() as usize;
    for t in &skt {
        let f = phi_flatten(t).map_err(e)?;
        for i in 2..n {
            let lhs = phi_flatten(&t.skt_d(i).map_err(e)?).map_err(e)?;
            let rhs = f.haiman_d(n - i + 1).map_err(e)?;
            ensure!(lhs == rhs, "flattening is not equivariant for d_{i} at\n{t}");
        }
    }
    Ok(())
}

pub fn criterion_bijections() -> Check {
    let shapes = key_shapes(6, 4);
    for a in &shapes {
        ascend_descend(a)?;
    }
    haiman_suite(7)?;
    word_suite()?;
    for a in &shapes {
        skt_suite(a)?;
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// axiom checks

/// Every reduced word of length `len` on letters `1..=max_letter`, grouped
/// by the product `s_{ρ_1} ⋯ s_{ρ_L}` acting on positions. Built letter by
/// letter: appending `k` keeps the word reduced exactly when `w(k) < w(k + 1)`.
pub fn reduced_words_by_permutation(len: usize, max_letter: usize) -> HashMap<Vec<u8>, Vec<ReducedWord>> {
    fn rec(w: &mut Vec<u8>, word: &mut Vec<u32>, len: usize, out: &mut HashMap<Vec<u8>, Vec<ReducedWord>>) {
        if word.len() == len {
            out.entry(w.clone()).or_default().push(ReducedWord(word.clone()));
            return;
        }
        for k in 1..w.len() {
            if w[k - 1] < w[k] {
                w.swap(k - 1, k);
                word.push(k as u32);
                rec(w, word, len, out);
                word.pop();
                w.swap(k - 1, k);
            }
        }
    }
    let mut w: Vec<u8> = (1..=max_letter as u8 + 1).collect();
    let mut out = HashMap::new();
    rec(&mut w, &mut Vec::new(), len, &mut out);
    out
}

/// A window only reads positions `h - 1..=i + 1`, so checking the widest
/// window on words of exactly that length, over an alphabet wide enough to
/// realize every pattern of equal, adjacent and distant letters, covers the
/// window on every longer word.
pub fn word_axioms_local(m: usize) -> Check {
    let window = [(2, m - 1)];
    for (_, words) in reduced_words_by_permutation(m, 2 * m) {
        let report = check_dual_equivalence(&WordFamily, &words, Some(&window));
        ensure!(report.passed(), "length {m}: {:?}", report.failures.first());
    }
    Ok(())
}

pub fn word_axioms_small_permutations() -> Check {
    for w in small_permutations() {
        let words = reduced_words(&w);
        let report = check_dual_equivalence(&WordFamily, &words, None);
        ensure!(report.passed(), "R({w}): {:?}", report.failures.first());
        let m = stabilization_shift(&w);
        let shifted: Vec<ReducedWord> = words.iter().map(|r| r.shifted(m as u32)).collect();
        let fam = WordWeakFamily { length: des_length(&w) + m };
        let report = check_weak_dual_equivalence(&fam, &shifted, None);
        ensure!(report.passed(), "weak R(1^{m} x {w}): {:?}", report.failures.first());
    }
    Ok(())
}

pub fn skt_axioms(max_size: u32, max_len: usize) -> Check {
    for a in key_shapes(max_size, max_len) {
        let skt = enumerate_skt(&a);
        let report = check_weak_dual_equivalence(&KeyFamily, &skt, None);
        ensure!(report.passed(), "SKT{a}: {:?}", report.failures.first());
    }
    Ok(())
}

pub fn criterion_axioms() -> Check {
    for m in 3..=6 {
        word_axioms_local(m)?;
    }
    word_axioms_small_permutations()?;
    skt_axioms(7, 5)
}

// ---------------------------------------------------------------------------
// stability

fn syt_f_expansion(lambda: &Partition) -> BasisExpansion {
    let mut out = BasisExpansion::new(Basis::FundamentalF);
    for t in enumerate_syt(lambda) {
        out.add(t.descent_composition().parts().to_vec(), 1).expect("counts fit");
    }
    out
}

pub fn key_stability(a: &WeakComposition) -> Check {
    let counts: Vec<usize> = (0..=4).map(|m| key_slide_expansion(&a.prepend_zeros(m)).len()).collect();
    ensure!(counts[3] == counts[4], "key{a}: term counts {counts:?} not yet constant");
    let no_virtual = enumerate_skt(a).iter().all(|t| !t.weak_descent().expect("key shape").is_virtual());
    let constant = counts.windows(2).all(|p| p[0] == p[1]);
    ensure!(no_virtual == constant, "key{a}: virtual-free {no_virtual} but counts {counts:?}");
    let flat = flatten_expansion(&key_slide_expansion(&a.prepend_zeros(3))).map_err(e)?;
    same(&format!("flattened key{a}"), &flat, &syt_f_expansion(&sort(a)))
}

pub fn schubert_stability(w: &Permutation) -> Check {
    let m = stabilization_shift(w) + 1;
    let flat = flatten_expansion(&schubert_slide_expansion(&w.shift(m))).map_err(e)?;
    same(&format!("flattened S_1^{m}x{w}"), &flat, &stanley_f_expansion(w))
}

pub fn criterion_stability() -> Check {
    for a in ["0,3,0,2", "3,1,0,1", "1,0,2"] {
        key_stability(&wc(a))?;
    }
    for w in ["42153", "321", "2143"] {
        schubert_stability(&perm(w))?;
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// products

pub fn shuffle_oracle(alpha: &StrongComposition, beta: &StrongComposition) -> Check {
    let got = shuffle_product(alpha, beta).map_err(e)?;
    let plateaus = shuffle_product_with(alpha, beta, ShuffleWitness::Plateaus).map_err(e)?;
    let blocks = shuffle_product_with(alpha, beta, ShuffleWitness::Blocks).map_err(e)?;
    same(&format!("{alpha} sh {beta} witnesses"), &plateaus, &blocks)?;
    same(&format!("{alpha} sh {beta}"), &got, &plateaus)?;
    let nvars = (alpha.len() + beta.len()).max(1);
    let lhs = fundamental_f(alpha, nvars).mul(&fundamental_f(beta, nvars)).map_err(e)?;
    ensure!(lhs == got.realize(nvars).map_err(e)?, "{alpha} sh {beta} = {got} is not F_a F_b");
    Ok(())
}

pub fn slide_oracle(a: &WeakComposition, b: &WeakComposition) -> Check {
    let got = slide_product(a, b).map_err(e)?;
    let lhs = fundamental_slide(a).mul(&fundamental_slide(b)).map_err(e)?;
    ensure!(lhs == got.realize(a.len()).map_err(e)?, "{a} sl {b} = {got} is not the product");
    Ok(())
}

pub fn shuffle_products(max: u32) -> Check {
    let comps: BTreeMap<u32, Vec<StrongComposition>> = (0..=max).map(|s| (s, strong_compositions(s))).collect();
    for s in 0..=max {
        for t in 0..=max - s {
            for alpha in &comps[&s] {
                for beta in &comps[&t] {
                    shuffle_oracle(alpha, beta)?;
                }
            }
        }
    }
    Ok(())
}

pub fn slide_products(max: u32, max_len: usize) -> Check {
    for len in 1..=max_len {
        let comps: Vec<Vec<WeakComposition>> = (0..=max).map(|s| weak_compositions(s, len)).collect();
        for s in 0..=max {
            for t in 0..=max - s {
                for a in &comps[s as usize] {
                    for b in &comps[t as usize] {
                        slide_oracle(a, b)?;
                    }
                }
            }
        }
    }
    Ok(())
}

pub fn criterion_products() -> Check {
    shuffle_products(8)?;
    slide_products(8, 4)
}
