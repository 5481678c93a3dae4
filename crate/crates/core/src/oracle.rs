//! Brute-force constructions that share no code with the combinatorial
//! models: Kohnert moves for key polynomials, divided differences for
//! Schubert polynomials and Jacobi-Trudi determinants for skew Schur
//! polynomials.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::foundations::{Partition, Polynomial, WeakComposition};
use crate::permwords::Permutation;

type Diagram = BTreeSet<(u32, u32)>;

/// All diagrams reachable from the key diagram of `a` by Kohnert moves:
/// the rightmost cell of a row drops to the highest empty cell below it in
/// its column.
pub fn kohnert_diagrams(a: &WeakComposition) -> Vec<Diagram> {
    let start: Diagram =
        a.parts().iter().enumerate().flat_map(|(r, &len)| (1..=len).map(move |c| (r as u32 + 1, c))).collect();
    let mut seen: HashSet<Diagram> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(d) = queue.pop_front() {
        for r in 1..=a.len() as u32 {
            let Some(&(_, c)) = d.iter().filter(|x| x.0 == r).max_by_key(|x| x.1) else { continue };
            let Some(target) = (1..r).rev().find(|&s| !d.contains(&(s, c))) else { continue };
            let mut e = d.clone();
            e.remove(&(r, c));
            e.insert((target, c));
            if seen.insert(e.clone()) {
                queue.push_back(e);
            }
        }
    }
    let mut out: Vec<Diagram> = seen.into_iter().collect();
    out.sort();
    out
}

/// `κ_a = Σ x^{wt(D)}` over Kohnert diagrams.
pub fn key_poly_kohnert(a: &WeakComposition) -> Polynomial {
    let n = a.len();
    let mut p = Polynomial::zero(n);
    for d in kohnert_diagrams(a) {
        let mut e = vec![0u32; n];
        for (r, _) in &d {
            e[*r as usize - 1] += 1;
        }
        p.add_term(e, 1).expect("counts fit");
    }
    p
}

/// `∂_i p = (p - s_i p) / (x_i - x_{i+1})`, `i` 1-based.
pub fn divided_difference(p: &Polynomial, i: usize) -> Result<Polynomial> {
    let n = p.nvars();
    if i == 0 || i >= n {
        return Err(Error::IndexRange { index: i, size: n });
    }
    let mut out = Polynomial::zero(n);
    for (e, &c) in p.terms() {
        let (a, b) = (e[i - 1], e[i]);
        let mut put = |x: u32, y: u32, s: i64| -> Result<()> {
            let mut f = e.clone();
            f[i - 1] = x;
            f[i] = y;
            out.add_term(f, s.checked_mul(c).ok_or(Error::Overflow)?)
        };
        if a > b {
            for k in 0..a - b {
                put(a - 1 - k, b + k, 1)?;
            }
        } else if a < b {
            for k in 0..b - a {
                put(a + k, b - 1 - k, -1)?;
            }
        }
    }
    Ok(out)
}

/// `𝔖_w` from `𝔖_{w_0} = x_1^{n-1} ⋯ x_{n-1}` by divided differences, in
/// `n - 1` variables.
pub fn schubert_divided_difference(w: &Permutation) -> Result<Polynomial> {
    let n = w.len();
    if n <= 1 {
        return Ok(Polynomial::one(0));
    }
    // climb to w_0 through ascents, then descend along the recorded path
    let mut path = Vec::new();
    let mut v = w.oneline().to_vec();
    while let Some(i) = (0..n - 1).find(|&i| v[i] < v[i + 1]) {
        v.swap(i, i + 1);
        path.push(i + 1);
    }
    let top: Vec<u32> = (0..n).map(|k| (n - 1 - k) as u32).collect();
    let mut p = Polynomial::monomial(top, 1);
    for &i in path.iter().rev() {
        p = divided_difference(&p, i)?;
    }
    let mut out = Polynomial::zero(n - 1);
    for (e, &c) in p.terms() {
        if e[n - 1] != 0 {
            return Err(Error::Inconsistent("Schubert polynomial uses the last variable".into()));
        }
        out.add_term(e[..n - 1].to_vec(), c)?;
    }
    Ok(out)
}

/// `h_k(x_1, …, x_n)`, every monomial of degree `k` once.
pub fn complete_homogeneous(k: u32, nvars: usize) -> Polynomial {
    fn rec(left: u32, cur: &mut Vec<u32>, nvars: usize, out: &mut Polynomial) {
        if cur.len() + 1 == nvars {
            cur.push(left);
            out.add_term(cur.clone(), 1).expect("length matches");
            cur.pop();
            return;
        }
        for e in 0..=left {
            cur.push(e);
            rec(left - e, cur, nvars, out);
            cur.pop();
        }
    }
    let mut out = Polynomial::zero(nvars);
    if nvars == 0 {
        if k == 0 {
            out = Polynomial::one(0);
        }
        return out;
    }
    rec(k, &mut Vec::new(), nvars, &mut out);
    out
}

/// `s_{λ/μ}(x_1, …, x_n) = det(h_{λ_i - μ_j - i + j})`, expanded over all
/// permutations of the rows.
pub fn jacobi_trudi(lambda: &Partition, mu: &Partition, nvars: usize) -> Result<Polynomial> {
    let l = lambda.len();
    if !lambda.contains(mu) {
        return Err(Error::Invalid(format!("{mu} is not inside {lambda}")));
    }
    let h: Vec<Polynomial> = (0..=lambda.size()).map(|k| complete_homogeneous(k, nvars)).collect();
    let entry = |i: usize, j: usize| -> Option<&Polynomial> {
        let d = lambda.part(i) as i64 - mu.part(j) as i64 - i as i64 + j as i64;
        (d >= 0).then(|| &h[d as usize])
    };
    let mut det = Polynomial::zero(nvars);
    let mut sigma: Vec<usize> = (0..l).collect();
    // Heap's algorithm; the sign flips with every swap
    let mut c = vec![0usize; l];
    let mut sign = 1;
    let term = |sigma: &[usize], sign: i64, det: &mut Polynomial| -> Result<()> {
        let mut p = Polynomial::one(nvars);
        for (i, &j) in sigma.iter().enumerate() {
            match entry(i, j) {
                Some(q) => p = p.mul(q)?,
                None => return Ok(()),
            }
        }
        det.add_scaled(&p, sign)
    };
    term(&sigma, sign, &mut det)?;
    let mut k = 1;
    while k < l {
        if c[k] < k {
            let swap = if k % 2 == 0 { 0 } else { c[k] };
            sigma.swap(swap, k);
            sign = -sign;
            term(&sigma, sign, &mut det)?;
            c[k] += 1;
            k = 1;
        } else {
            c[k] = 0;
            k += 1;
        }
    }
    Ok(det)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kohnert_small_key() {
        // κ_(0,1) = x_1 + x_2
        let p = key_poly_kohnert(&"0,1".parse().unwrap());
        assert_eq!(p.len(), 2);
        assert_eq!(p.coef(&[1, 0]), 1);
        assert_eq!(p.coef(&[0, 1]), 1);
    }

    #[test]
    fn schubert_of_transposition() {
        let p = schubert_divided_difference(&"132".parse().unwrap()).unwrap();
        assert_eq!(p.coef(&[1, 0]), 1);
        assert_eq!(p.coef(&[0, 1]), 1);
        assert_eq!(p.len(), 2);
        let id = schubert_divided_difference(&"123".parse().unwrap()).unwrap();
        assert_eq!(id.coef(&[0, 0]), 1);
    }

    #[test]
    fn jacobi_trudi_small() {
        // s_(1,1)(x_1, x_2, x_3) = e_2
        let p = jacobi_trudi(&"1,1".parse().unwrap(), &"".parse().unwrap(), 3).unwrap();
        assert_eq!(p.len(), 3);
        assert!(p.terms().iter().all(|(e, &c)| c == 1 && e.iter().all(|&x| x <= 1)));
        // s_(2,1)/(1) = h_1^2 - ... = s_2 + s_11 = h_1^2
        let skew = jacobi_trudi(&"2,1".parse().unwrap(), &"1".parse().unwrap(), 2).unwrap();
        let h1 = complete_homogeneous(1, 2);
        assert_eq!(skew, h1.mul(&h1).unwrap());
        assert_eq!(complete_homogeneous(2, 3).len(), 6);
    }
}
