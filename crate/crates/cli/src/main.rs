//! `schubkey` command-line frontend.
//!
//! Exit status: 0 on success, 1 when an oracle cross-check, a positivity
//! postcondition or an axiom check fails, 2 on malformed input.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use schubkey::bases::*;
use schubkey::dualequiv::*;
use schubkey::foundations::*;
use schubkey::oracle::*;
use schubkey::permwords::*;
use schubkey::tableaux::*;

#[derive(Parser)]
#[command(name = "schubkey", version, about = "Schubert, key and Schur polynomial expansions")]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Re-verify the result by brute-force monomial arithmetic.
    #[arg(long, global = true)]
    oracle: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BasisArg {
    Monomial,
    Fundamental,
    Slide,
    Schur,
    Key,
}

impl From<BasisArg> for Basis {
    fn from(b: BasisArg) -> Basis {
        match b {
            BasisArg::Monomial => Basis::Monomial,
            BasisArg::Fundamental => Basis::FundamentalF,
            BasisArg::Slide => Basis::Slide,
            BasisArg::Schur => Basis::Schur,
            BasisArg::Key => Basis::Key,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KeyModel {
    Skt,
    Qkt,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum WitnessArg {
    Plateaus,
    Blocks,
    Both,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TableauKind {
    Syt,
    SkewSyt,
    ProductSyt,
    Skt,
    Qkt,
    SkewSkt,
    ProductSkt,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum AxiomFamily {
    /// Reduced words, every window, by locality.
    Words,
    /// Weak classes of reduced words of every permutation up to `--max`.
    WeakWords,
    Syt,
    Skt,
    /// Standard key tableaux of product shapes.
    Product,
}

#[derive(Subcommand)]
enum Command {
    /// Schur polynomial s_λ(x_1..x_k).
    Schur {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        nvars: Option<usize>,
        #[arg(long, value_enum, default_value = "schur")]
        basis: BasisArg,
    },
    /// Key polynomial κ_a.
    Key {
        #[arg(long)]
        a: WeakComposition,
        #[arg(long, value_enum, default_value = "slide")]
        basis: BasisArg,
        #[arg(long, value_enum, default_value = "skt")]
        model: KeyModel,
    },
    /// Schubert polynomial 𝔖_w.
    Schubert {
        #[arg(long)]
        w: Permutation,
        #[arg(long, value_enum, default_value = "slide")]
        basis: BasisArg,
    },
    /// Stanley symmetric function S_w, realized in `--nvars` variables.
    Stanley {
        #[arg(long)]
        w: Permutation,
        #[arg(long)]
        nvars: Option<usize>,
        #[arg(long, value_enum, default_value = "fundamental")]
        basis: BasisArg,
    },
    /// Skew key polynomial κ_{d/a}; `--lambda` uses the increasing inner shape.
    SkewKey {
        #[arg(long)]
        d: WeakComposition,
        #[arg(long, conflicts_with = "lambda")]
        a: Option<WeakComposition>,
        #[arg(long)]
        lambda: Option<Partition>,
        #[arg(long, value_enum, default_value = "key")]
        basis: BasisArg,
    },
    /// Skew Schur polynomial s_{λ/μ}.
    SkewSchur {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        nvars: Option<usize>,
        #[arg(long, value_enum, default_value = "schur")]
        basis: BasisArg,
    },
    /// κ_a κ_b (`--a --b`), κ_a s_λ (`--a --lambda`) or s_μ s_ν (`--mu --nu`).
    Product(ProductArgs),
    /// Shuffle product F_α F_β.
    Shuffle {
        #[arg(long)]
        alpha: StrongComposition,
        #[arg(long)]
        beta: StrongComposition,
        #[arg(long, value_enum, default_value = "both")]
        witness: WitnessArg,
    },
    /// Slide product 𝔉_a 𝔉_b.
    SlideProduct {
        #[arg(long)]
        a: WeakComposition,
        #[arg(long)]
        b: WeakComposition,
    },
    /// Reduced words of w with their descent compositions.
    ReducedWords {
        #[arg(long)]
        w: Permutation,
        #[arg(long)]
        count: bool,
    },
    /// Enumerate tableaux of a shape.
    Tableaux(TableauArgs),
    /// Dual equivalence classes and what each one generates.
    Classes(ClassArgs),
    /// Rectify one reduced word or tableau.
    Rectify(RectifyArgs),
    /// Check the dual equivalence axioms on generated carriers.
    CheckAxioms(AxiomArgs),
    /// Rewrite an expansion such as "1*key(0,3,0,2)" in another basis.
    Expand {
        #[arg(long)]
        from: BasisExpansion,
        #[arg(long, value_enum)]
        basis: BasisArg,
        #[arg(long)]
        nvars: Option<usize>,
    },
}

#[derive(Args)]
struct ProductArgs {
    #[arg(long)]
    a: Option<WeakComposition>,
    #[arg(long)]
    b: Option<WeakComposition>,
    #[arg(long)]
    lambda: Option<Partition>,
    #[arg(long)]
    mu: Option<Partition>,
    #[arg(long)]
    nu: Option<Partition>,
    #[arg(long, value_enum)]
    basis: Option<BasisArg>,
}

#[derive(Args)]
struct TableauArgs {
    #[arg(long, value_enum)]
    kind: TableauKind,
    #[arg(long)]
    lambda: Option<Partition>,
    #[arg(long)]
    mu: Option<Partition>,
    #[arg(long)]
    a: Option<WeakComposition>,
    #[arg(long)]
    b: Option<WeakComposition>,
    #[arg(long)]
    d: Option<WeakComposition>,
    #[arg(long)]
    count: bool,
}

#[derive(Args)]
struct ClassArgs {
    /// Reduced words of this permutation.
    #[arg(long)]
    w: Option<Permutation>,
    /// Use weak classes of reduced words, shifted until none is virtual.
    #[arg(long)]
    weak: bool,
    /// Standard Young tableaux of this (outer) shape.
    #[arg(long)]
    lambda: Option<Partition>,
    #[arg(long)]
    mu: Option<Partition>,
    /// Standard key tableaux of this (outer or left) shape.
    #[arg(long)]
    a: Option<WeakComposition>,
    /// Inner shape of a skew key shape.
    #[arg(long)]
    inner: Option<WeakComposition>,
    /// Right factor of a key product shape.
    #[arg(long)]
    right: Option<WeakComposition>,
    /// Print each class as a graphviz graph.
    #[arg(long)]
    dot: bool,
}

#[derive(Args)]
struct RectifyArgs {
    #[arg(long)]
    word: Option<ReducedWord>,
    #[arg(long)]
    weak: bool,
    #[arg(long)]
    lambda: Option<Partition>,
    #[arg(long)]
    mu: Option<Partition>,
    #[arg(long)]
    a: Option<WeakComposition>,
    #[arg(long)]
    inner: Option<WeakComposition>,
    /// Rows top first, separated by '/', skewed cells as '##'.
    #[arg(long)]
    rows: Option<String>,
}

#[derive(Args)]
struct AxiomArgs {
    #[arg(long, value_enum)]
    family: AxiomFamily,
    /// Size bound: letters for words, permutation size for weak words,
    /// number of cells otherwise.
    #[arg(long)]
    max: Option<u32>,
    /// Bound on the number of rows of key shapes.
    #[arg(long, default_value_t = 4)]
    max_len: usize,
    /// A single product carrier.
    #[arg(long, requires = "b")]
    a: Option<WeakComposition>,
    #[arg(long, requires = "a")]
    b: Option<WeakComposition>,
    /// Sweep every right factor, not only weakly increasing ones.
    #[arg(long)]
    any_right: bool,
    /// Witness classes printed per failing window.
    #[arg(long, default_value_t = 1)]
    witnesses: usize,
}

enum CliError {
    Usage(String),
    Failed(String),
}

impl From<schubkey::Error> for CliError {
    fn from(e: schubkey::Error) -> Self {
        use schubkey::Error as E;
        match e {
            E::Inconsistent(_) | E::Negative(_) | E::Residual | E::Overflow => CliError::Failed(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

fn usage<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(CliError::Usage(msg.into()))
}

/// What a command produced.
enum Output {
    Expansion { header: Value, expansion: BasisExpansion, nvars: usize, oracle: Option<Polynomial> },
    Listing { text: String, json: Value, passed: bool },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => emit(&cli, out),
        Err(CliError::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(CliError::Failed(m)) => {
            eprintln!("check failed: {m}");
            ExitCode::from(1)
        }
    }
}

fn emit(cli: &Cli, out: Output) -> ExitCode {
    match out {
        Output::Expansion { header, expansion, nvars, oracle } => {
            let mut verdict = None;
            if let Some(want) = oracle {
                let got = match expansion.realize(nvars) {
                    Ok(p) => p,
                    Err(e) => {
                        eprintln!("check failed: cannot realize expansion: {e}");
                        return ExitCode::from(1);
                    }
                };
                verdict = Some(want.padded(nvars).map(|w| w == got).unwrap_or(false));
            }
            if cli.json {
                let mut v = header;
                if let (Value::Object(m), Value::Object(e)) = (&mut v, expansion.to_json()) {
                    m.extend(e);
                    m.insert("nvars".into(), json!(nvars));
                    if let Some(ok) = verdict {
                        m.insert("oracle".into(), json!(ok));
                    }
                }
                println!("{v}");
            } else {
                println!("{expansion}");
            }
            match verdict {
                Some(false) => {
                    eprintln!("check failed: expansion does not realize to the oracle polynomial");
                    ExitCode::from(1)
                }
                Some(true) => {
                    eprintln!("oracle: agrees in {nvars} variables");
                    ExitCode::SUCCESS
                }
                None => ExitCode::SUCCESS,
            }
        }
        Output::Listing { text, json, passed } => {
            if cli.json {
                println!("{json}");
            } else {
                print!("{text}");
            }
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    }
}

/// Rewrites a polynomial in `basis`. Fundamental quasisymmetric terms are
/// read off the slide expansion, whose indices must then be right-justified.
fn in_basis(p: &Polynomial, basis: Basis) -> CliResult<BasisExpansion> {
    Ok(match basis {
        Basis::Monomial => expand_in_monomial(p),
        Basis::Slide => expand_in_slide(p)?,
        Basis::Key => expand_in_key(p)?,
        Basis::Schur => expand_in_schur(p)?,
        Basis::FundamentalF => {
            let slides = expand_in_slide(p)?;
            let mut out = BasisExpansion::new(Basis::FundamentalF);
            for (k, c) in slides.terms() {
                let first = k.iter().position(|&x| x > 0).unwrap_or(k.len());
                if k[first..].contains(&0) {
                    return usage("polynomial is not quasisymmetric");
                }
                out.add(k[first..].to_vec(), *c)?;
            }
            out
        }
    })
}

fn expansion_output(
    cli: &Cli,
    header: Value,
    expansion: BasisExpansion,
    nvars: usize,
    oracle: impl FnOnce() -> CliResult<Polynomial>,
) -> CliResult<Output> {
    let oracle = if cli.oracle { Some(oracle()?) } else { None };
    Ok(Output::Expansion { header, expansion, nvars, oracle })
}

fn run(cli: &Cli) -> CliResult<Output> {
    match &cli.command {
        Command::Schur { lambda, nvars, basis } => {
            let k = nvars.unwrap_or(lambda.len().max(1));
            let a = if lambda.len() <= k { Some(lambda.increasing_composition(k)?) } else { None };
            let e = match (Basis::from(*basis), &a) {
                (_, None) => BasisExpansion::new((*basis).into()),
                (Basis::Schur, _) => BasisExpansion::from_terms(Basis::Schur, [(lambda.parts().to_vec(), 1)])?,
                (Basis::Key, Some(a)) => BasisExpansion::from_terms(Basis::Key, [(a.parts().to_vec(), 1)])?,
                (Basis::Slide, Some(a)) => key_slide_expansion(a),
                (Basis::FundamentalF, _) => {
                    let mut e = BasisExpansion::new(Basis::FundamentalF);
                    for t in enumerate_syt(lambda) {
                        let alpha = t.descent_composition();
                        if alpha.len() <= k {
                            e.add(alpha.parts().to_vec(), 1)?;
                        }
                    }
                    e
                }
                (Basis::Monomial, _) => expand_in_monomial(&schur_poly(lambda, k)?),
            };
            let header = Family::Schur { lambda: lambda.clone(), k }.header();
            expansion_output(cli, header, e, k, || Ok(jacobi_trudi(lambda, &Partition::default(), k)?))
        }
        Command::Key { a, basis, model } => {
            if a.is_empty() {
                return usage("key polynomials need at least one row");
            }
            let e = match (Basis::from(*basis), model) {
                (Basis::Slide, KeyModel::Skt) => key_slide_expansion(a),
                (Basis::Slide, KeyModel::Qkt) => key_slide_expansion_qkt(a),
                (Basis::Key, _) => BasisExpansion::from_terms(Basis::Key, [(a.parts().to_vec(), 1)])?,
                (b, KeyModel::Skt) => in_basis(&key_poly(a), b)?,
                (b, KeyModel::Qkt) => in_basis(&key_poly_qkt(a), b)?,
            };
            let header = Family::Key { a: a.clone() }.header();
            expansion_output(cli, header, e, a.len(), || Ok(key_poly_kohnert(a)))
        }
        Command::Schubert { w, basis } => {
            let nvars = des_length(w);
            let e = match Basis::from(*basis) {
                Basis::Slide => schubert_slide_expansion(w),
                Basis::Key => schubert_key_expansion(w)?,
                b => in_basis(&schubert_poly(w)?, b)?,
            };
            let header = Family::Schubert { w: w.clone() }.header();
            expansion_output(cli, header, e, nvars, || Ok(schubert_divided_difference(w)?))
        }
        Command::Stanley { w, nvars, basis } => {
            let n = nvars.unwrap_or(w.inv().max(1));
            let e = match Basis::from(*basis) {
                Basis::FundamentalF => stanley_f_expansion(w),
                Basis::Schur => stanley_schur_expansion(w)?,
                Basis::Monomial => expand_in_monomial(&stanley_poly(w, n)),
                _ => return usage("Stanley symmetric functions expand in fundamental, schur or monomial"),
            };
            let header = Family::Stanley { w: w.clone(), nvars: n }.header();
            // stable limit: flatten the slide expansion of 1^m × w computed
            // from divided differences
            expansion_output(cli, header, e, n, || {
                let m = stabilization_shift(w) + 1;
                let slides = expand_in_slide(&schubert_divided_difference(&w.shift(m))?)?;
                Ok(flatten_expansion(&slides)?.realize(n)?)
            })
        }
        Command::SkewKey { d, a, lambda, basis } => {
            let inner = match (a, lambda) {
                (Some(a), _) => a.clone(),
                (None, Some(l)) => l.increasing_composition(d.len())?,
                (None, None) => return usage("give the inner shape with --a or --lambda"),
            };
            let e = match (Basis::from(*basis), lambda) {
                (Basis::Key, Some(l)) => skew_key_expansion(d, l)?,
                (Basis::Key, None) => skew_key_key_expansion(d, &inner)?,
                (Basis::Slide, _) => skew_key_slide_expansion(d, &inner)?,
                (b, _) => in_basis(&skew_key_poly(d, &inner)?, b)?,
            };
            let header = Family::SkewKey { d: d.clone(), a: inner.clone() }.header();
            expansion_output(cli, header, e, d.len(), || Ok(skew_key_poly(d, &inner)?))
        }
        Command::SkewSchur { lambda, mu, nvars, basis } => {
            if !lambda.contains(mu) {
                return usage(format!("{mu} is not inside {lambda}"));
            }
            let k = nvars.unwrap_or(((lambda.size() - mu.size()) as usize).max(1));
            let e = match Basis::from(*basis) {
                Basis::Schur => {
                    let mut e = BasisExpansion::new(Basis::Schur);
                    for (nu, c) in skew_schur_expansion(lambda, mu)?.terms() {
                        if nu.len() <= k {
                            e.add(nu.clone(), *c)?;
                        }
                    }
                    e
                }
                b => in_basis(&skew_schur_poly(lambda, mu, k)?, b)?,
            };
            let header = Family::SkewSchur { lambda: lambda.clone(), mu: mu.clone(), k }.header();
            expansion_output(cli, header, e, k, || Ok(jacobi_trudi(lambda, mu, k)?))
        }
        Command::Product(p) => product(cli, p),
        Command::Shuffle { alpha, beta, witness } => {
            let e = match witness {
                WitnessArg::Plateaus => shuffle_product_with(alpha, beta, ShuffleWitness::Plateaus)?,
                WitnessArg::Blocks => shuffle_product_with(alpha, beta, ShuffleWitness::Blocks)?,
                WitnessArg::Both => shuffle_product(alpha, beta)?,
            };
            let n = (alpha.len() + beta.len()).max(1);
            let header = json!({"family": "SHUFFLE", "alpha": alpha.parts(), "beta": beta.parts()});
            expansion_output(cli, header, e, n, || Ok(fundamental_f(alpha, n).mul(&fundamental_f(beta, n))?))
        }
        Command::SlideProduct { a, b } => {
            let e = slide_product(a, b)?;
            let header = json!({"family": "SLIDE_PRODUCT", "a": a.parts(), "b": b.parts()});
            expansion_output(cli, header, e, a.len(), || Ok(fundamental_slide(a).mul(&fundamental_slide(b))?))
        }
        Command::ReducedWords { w, count } => reduced_words_cmd(w, *count),
        Command::Tableaux(t) => tableaux_cmd(t),
        Command::Classes(c) => classes_cmd(c),
        Command::Rectify(r) => rectify_cmd(r),
        Command::CheckAxioms(a) => check_axioms_cmd(a),
        Command::Expand { from, basis, nvars } => {
            let n = nvars.unwrap_or_else(|| from.terms().keys().map(|k| k.len()).max().unwrap_or(1).max(1));
            let p = from.realize(n)?;
            let e = in_basis(&p, (*basis).into())?;
            let header = json!({"family": "EXPAND", "from": from.to_json()});
            expansion_output(cli, header, e, n, || Ok(p))
        }
    }
}

fn product(cli: &Cli, p: &ProductArgs) -> CliResult<Output> {
    match (&p.a, &p.b, &p.lambda, &p.mu, &p.nu) {
        (Some(a), Some(b), None, None, None) => {
            if a.len() != b.len() {
                return usage("key factors need the same length");
            }
            let e = match p.basis.map(Basis::from).unwrap_or(Basis::Key) {
                Basis::Key => key_product_key_expansion(a, b)?,
                Basis::Slide => key_product_slide_model(a, b)?,
                other => in_basis(&key_poly(a).mul(&key_poly(b))?, other)?,
            };
            let header = json!({"family": "KEY_PRODUCT", "a": a.parts(), "b": b.parts()});
            expansion_output(cli, header, e, a.len(), || Ok(key_poly_kohnert(a).mul(&key_poly_kohnert(b))?))
        }
        (Some(b), None, Some(lambda), None, None) => {
            let n = b.len();
            let e = match p.basis.map(Basis::from).unwrap_or(Basis::Key) {
                Basis::Key => key_times_schur(b, lambda, n)?,
                other => in_basis(&key_poly(b).mul(&schur_poly(lambda, n)?)?, other)?,
            };
            let header = json!({"family": "KEY_TIMES_SCHUR", "b": b.parts(), "lambda": lambda.parts(), "n": n});
            expansion_output(cli, header, e, n, || {
                Ok(key_poly_kohnert(b).mul(&jacobi_trudi(lambda, &Partition::default(), n)?)?)
            })
        }
        (None, None, None, Some(mu), Some(nu)) => {
            let n = (mu.len() + nu.len()).max(1);
            let e = match p.basis.map(Basis::from).unwrap_or(Basis::Schur) {
                Basis::Schur => lr_coefficients(mu, nu)?,
                other => in_basis(&schur_poly(mu, n)?.mul(&schur_poly(nu, n)?)?, other)?,
            };
            let header = json!({"family": "SCHUR_PRODUCT", "mu": mu.parts(), "nu": nu.parts()});
            expansion_output(cli, header, e, n, || {
                let e = Partition::default();
                Ok(jacobi_trudi(mu, &e, n)?.mul(&jacobi_trudi(nu, &e, n)?)?)
            })
        }
        _ => usage("product takes --a with --b, --a with --lambda, or --mu with --nu"),
    }
}

fn reduced_words_cmd(w: &Permutation, count: bool) -> CliResult<Output> {
    let words = reduced_words(w);
    let len = des_length(w);
    let mut text = String::new();
    let mut items = Vec::new();
    if count {
        writeln!(text, "{}", words.len()).expect("string");
    }
    for r in &words {
        let des = weak_descent_word(r, len)?;
        if !count {
            writeln!(text, "{r}  Des {}  des {des}", descent_composition(r)).expect("string");
        }
        items.push(json!({
            "word": r.letters(),
            "Des": descent_composition(r).parts(),
            "des": des.weak().map(|d| d.parts().to_vec()),
        }));
    }
    let json = json!({"family": "SCHUBERT", "w": w.oneline(), "count": words.len(), "words": items});
    Ok(Output::Listing { text, json, passed: true })
}

fn need<'a, T>(x: &'a Option<T>, flag: &str) -> CliResult<&'a T> {
    x.as_ref().ok_or_else(|| CliError::Usage(format!("missing --{flag}")))
}

fn tableaux_cmd(t: &TableauArgs) -> CliResult<Output> {
    let empty = Partition::default();
    let shape = match t.kind {
        TableauKind::Qkt => {
            let a = need(&t.a, "a")?;
            let all = enumerate_qkt(a);
            let mut text = String::new();
            if t.count {
                writeln!(text, "{}", all.len()).expect("string");
            } else {
                for d in &all {
                    writeln!(text, "{d}\nweight {}\n", d.weight()).expect("string");
                }
            }
            let items: Vec<Value> = all
                .iter()
                .map(|d| json!({"cells": d.cells(), "weight": d.weight().weak().map(|w| w.parts().to_vec())}))
                .collect();
            let json = json!({"kind": "QKT", "a": a.parts(), "count": all.len(), "tableaux": items});
            return Ok(Output::Listing { text, json, passed: true });
        }
        TableauKind::Syt => Shape::young(need(&t.lambda, "lambda")?.clone()),
        TableauKind::SkewSyt => Shape::skew_young(need(&t.lambda, "lambda")?.clone(), t.mu.clone().unwrap_or(empty))?,
        TableauKind::ProductSyt => Shape::YoungProduct(need(&t.lambda, "lambda")?.clone(), need(&t.mu, "mu")?.clone()),
        TableauKind::Skt => Shape::Key(need(&t.a, "a")?.clone()),
        TableauKind::SkewSkt => {
            let d = need(&t.d, "d")?;
            let a = t.a.clone().unwrap_or_else(|| WeakComposition::zeros(d.len()));
            Shape::skew_key(d.clone(), a)?
        }
        TableauKind::ProductSkt => Shape::key_product(need(&t.a, "a")?.clone(), need(&t.b, "b")?.clone())?,
    };
    let all = enumerate(&shape);
    let mut text = String::new();
    let mut items = Vec::new();
    if t.count {
        writeln!(text, "{}", all.len()).expect("string");
    }
    for f in &all {
        let (label, stat) = if shape.is_key() {
            let d = f.weak_descent()?;
            ("des", json!(d.weak().map(|w| w.parts().to_vec())))
        } else {
            ("Des", json!(f.descent_composition().parts()))
        };
        if !t.count {
            let shown =
                if shape.is_key() { f.weak_descent()?.to_string() } else { f.descent_composition().to_string() };
            writeln!(text, "{f}\n{label} {shown}\n").expect("string");
        }
        let mut j = f.to_json();
        if let Value::Object(m) = &mut j {
            m.insert(label.into(), stat);
        }
        items.push(j);
    }
    let json = json!({"shape": shape.to_string(), "count": all.len(), "tableaux": items});
    Ok(Output::Listing { text, json, passed: true })
}

/// Text and JSON for one class.
struct ClassLine {
    generates: String,
    members: Vec<(String, String)>,
    dot: Option<String>,
}

fn class_output(classes: Vec<ClassLine>, what: &str, dot: bool) -> Output {
    let mut text = String::new();
    let mut items = Vec::new();
    for (k, c) in classes.iter().enumerate() {
        if dot {
            text.push_str(c.dot.as_deref().unwrap_or(""));
            continue;
        }
        writeln!(text, "class {} ({} members): {}", k + 1, c.members.len(), c.generates).expect("string");
        for (m, stat) in &c.members {
            let m = m.replace('\n', "\n    ");
            writeln!(text, "    {m}\n    {stat}").expect("string");
        }
        items.push(json!({
            "generates": c.generates,
            "members": c.members.iter().map(|(m, s)| json!({"object": m, "descent": s})).collect::<Vec<_>>(),
        }));
    }
    Output::Listing { text, json: json!({"carrier": what, "classes": items}), passed: true }
}

fn classes_cmd(c: &ClassArgs) -> CliResult<Output> {
    let mut lines = Vec::new();
    if let Some(w) = &c.w {
        let words = reduced_words(w);
        if c.weak {
            let m = stabilization_shift(w);
            let fam = WordWeakFamily { length: des_length(w) + m };
            let shifted: Vec<ReducedWord> = words.iter().map(|r| r.shifted(m as u32)).collect();
            let mut cache = KeyDescentCache::default();
            for class in full_classes(&fam, &shifted) {
                let r = weak_rectify_class(&fam, &class[0], &mut cache)?;
                let shape = WeakComposition::new(r.shape.parts()[m..].to_vec());
                lines.push(ClassLine {
                    generates: format!("key{shape}"),
                    members: class.iter().map(|u| (u.to_string(), format!("des {}", fam.weak_descent(u)))).collect(),
                    dot: c.dot.then(|| to_dot(&fam, &class, &format!("key{shape}"))),
                });
            }
            let what = format!("R(1^{m} x {w})");
            return Ok(class_output(lines, &what, c.dot));
        }
        for class in full_classes(&WordFamily, &words) {
            let r = rectify_class(&WordFamily, &class[0])?;
            lines.push(ClassLine {
                generates: format!("s{}", r.shape),
                members: class.iter().map(|u| (u.to_string(), format!("Des {}", descent_composition(u)))).collect(),
                dot: c.dot.then(|| to_dot(&WordFamily, &class, &format!("s{}", r.shape))),
            });
        }
        return Ok(class_output(lines, &format!("R({w})"), c.dot));
    }
    if let Some(lambda) = &c.lambda {
        let shape = Shape::skew_young(lambda.clone(), c.mu.clone().unwrap_or_default())?;
        for class in full_classes(&YoungFamily, &enumerate(&shape)) {
            let r = rectify_class(&YoungFamily, &class[0])?;
            lines.push(ClassLine {
                generates: format!("s{}", r.shape),
                members: class.iter().map(|u| (u.to_string(), format!("Des {}", u.descent_composition()))).collect(),
                dot: c.dot.then(|| to_dot(&YoungFamily, &class, &format!("s{}", r.shape))),
            });
        }
        return Ok(class_output(lines, &shape.to_string(), c.dot));
    }
    let a = need(&c.a, "w, --lambda or --a")?;
    let shape = match (&c.inner, &c.right) {
        (Some(_), Some(_)) => return usage("--inner and --right exclude each other"),
        (Some(i), None) => Shape::skew_key(a.clone(), i.clone())?,
        (None, Some(b)) => Shape::key_product(a.clone(), b.clone())?,
        (None, None) => Shape::Key(a.clone()),
    };
    let mut cache = KeyDescentCache::default();
    for class in full_classes(&KeyFamily, &enumerate(&shape)) {
        let des: Vec<WeakDescent> = class.iter().map(|t| t.weak_descent()).collect::<schubkey::Result<_>>()?;
        let generates = if des.iter().all(|d| d.is_virtual()) {
            "0 (every member is virtual)".to_string()
        } else {
            let schur = rectify_class(&KeyFamily, &class[0]).map(|r| format!("s{}", r.shape));
            let key = weak_rectify_class(&KeyFamily, &class[0], &mut cache).map(|r| format!("key{}", r.shape));
            match (key, schur) {
                (Ok(k), _) => k,
                (Err(_), Ok(s)) => format!("no single key ({s} after flattening)"),
                (Err(_), Err(_)) => "no single key".to_string(),
            }
        };
        lines.push(ClassLine {
            members: class.iter().zip(&des).map(|(t, d)| (t.to_string(), format!("des {d}"))).collect(),
            dot: c.dot.then(|| to_dot(&KeyFamily, &class, &generates)),
            generates,
        });
    }
    Ok(class_output(lines, &shape.to_string(), c.dot))
}

fn rectify_cmd(r: &RectifyArgs) -> CliResult<Output> {
    if let Some(word) = &r.word {
        let w = Permutation::from_word(word.letters(), 0)
            .ok_or_else(|| CliError::Usage(format!("{word} is not a reduced word")))?;
        let (t, shape, shift) = if r.weak {
            let m = stabilization_shift(&w);
            let fam = WordWeakFamily { length: des_length(&w) + m };
            let rect = weak_rectify_class(&fam, &word.shifted(m as u32), &mut KeyDescentCache::default())?;
            let t = rect.map[&word.shifted(m as u32)].clone();
            (t, format!("key{}", rect.shape), m)
        } else {
            let rect = rectify_class(&WordFamily, word)?;
            (rect.map[word].clone(), format!("s{}", rect.shape), 0)
        };
        let mut text = String::new();
        if shift > 0 {
            writeln!(text, "shifted by {shift}").expect("string");
        }
        writeln!(text, "{shape}\n{t}").expect("string");
        let json = json!({"word": word.letters(), "shift": shift, "shape": shape, "tableau": t.to_json()});
        return Ok(Output::Listing { text, json, passed: true });
    }
    let rows = need(&r.rows, "rows")?;
    let (t, rect_shape, image) = if let Some(lambda) = &r.lambda {
        let shape = Shape::skew_young(lambda.clone(), r.mu.clone().unwrap_or_default())?;
        let f = Filling::parse(shape, rows)?;
        let rect = rectify_class(&YoungFamily, &f)?;
        let image = rect.map[&f].clone();
        (f, format!("s{}", rect.shape), image)
    } else {
        let a = need(&r.a, "word, --lambda or --a")?;
        let shape = match &r.inner {
            Some(i) => Shape::skew_key(a.clone(), i.clone())?,
            None => Shape::Key(a.clone()),
        };
        let f = Filling::parse(shape, rows)?;
        let rect = weak_rectify_class(&KeyFamily, &f, &mut KeyDescentCache::default())?;
        let image = rect.map[&f].clone();
        (f, format!("key{}", rect.shape), image)
    };
    let text = format!("{t}\nrectifies in {rect_shape} to\n{image}\n");
    let json = json!({"tableau": t.to_json(), "shape": rect_shape, "image": image.to_json()});
    Ok(Output::Listing { text, json, passed: true })
}

#[derive(Default)]
struct WindowTally {
    classes: usize,
    failures: Vec<Failure>,
}

/// Runs the checker window by window over every carrier and tallies.
fn tally<F, C>(carriers: &[Vec<F::Obj>], n: usize, check: C) -> Tally
where
    F: InvolutionFamily,
    C: Fn(&[F::Obj], &[(usize, usize)]) -> CheckReport,
{
    let mut windows: BTreeMap<(usize, usize), WindowTally> = BTreeMap::new();
    let mut involution = Vec::new();
    let mut objects = 0;
    for carrier in carriers {
        objects += carrier.len();
        if carrier.is_empty() {
            continue;
        }
        for (k, w) in all_windows(n).into_iter().enumerate() {
            let report = check(carrier, &[w]);
            let t = windows.entry(w).or_default();
            t.classes += report.classes;
            for f in report.failures {
                match f.kind {
                    FailureKind::ClassNotSchur | FailureKind::ClassNotKey => t.failures.push(f),
                    _ if k == 0 => involution.push(f),
                    _ => {}
                }
            }
        }
        if n < 3 {
            // no windows, but the involutions still have to be checked
            let report = check(carrier, &[]);
            involution.extend(report.failures);
        }
    }
    (windows, involution, objects)
}

fn check_axioms_cmd(a: &AxiomArgs) -> CliResult<Output> {
    let mut sections: Vec<Section> = Vec::new();
    let mut push = |label: String, r: Tally| {
        sections.push((label, r.0, r.1, r.2));
    };
    match a.family {
        AxiomFamily::Words => {
            let letters = a.max.unwrap_or(6) as usize;
            if letters > 12 {
                return usage("word sweeps are limited to 12 letters");
            }
            for m in 3..=letters / 2 {
                let mut groups: BTreeMap<Permutation, Vec<ReducedWord>> = BTreeMap::new();
                for r in all_reduced_words(m, 2 * m) {
                    let w = Permutation::from_word(r.letters(), 2 * m + 1).expect("reduced");
                    groups.entry(w).or_default().push(r);
                }
                let carriers: Vec<Vec<ReducedWord>> = groups.into_values().collect();
                let window = [(2, m - 1)];
                let mut tallies = BTreeMap::new();
                let mut involution = Vec::new();
                let mut objects = 0;
                for c in &carriers {
                    objects += c.len();
                    let report = check_dual_equivalence(&WordFamily, c, Some(&window));
                    let t: &mut WindowTally = tallies.entry(window[0]).or_default();
                    t.classes += report.classes;
                    for f in report.failures {
                        match f.kind {
                            FailureKind::ClassNotSchur => t.failures.push(f),
                            _ => involution.push(f),
                        }
                    }
                }
                push(format!("reduced words of length {m} on letters 1..{}", 2 * m), (tallies, involution, objects));
            }
        }
        AxiomFamily::WeakWords => {
            let max = a.max.unwrap_or(4) as usize;
            for n in 1..=max {
                for w in Permutation::all(n) {
                    let m = stabilization_shift(&w);
                    let fam = WordWeakFamily { length: des_length(&w) + m };
                    let words: Vec<ReducedWord> = reduced_words(&w).iter().map(|r| r.shifted(m as u32)).collect();
                    let r = tally::<WordWeakFamily, _>(&[words], w.inv(), |c, ws| {
                        check_weak_dual_equivalence(&fam, c, Some(ws))
                    });
                    push(format!("R(1^{m} x {w})"), r);
                }
            }
        }
        AxiomFamily::Syt => {
            let max = a.max.unwrap_or(6);
            for n in 1..=max {
                let carriers: Vec<Vec<Filling>> = Partition::all_of(n).iter().map(enumerate_syt).collect();
                let r = tally::<YoungFamily, _>(&carriers, n as usize, |c, ws| {
                    check_dual_equivalence(&YoungFamily, c, Some(ws))
                });
                push(format!("standard Young tableaux with {n} cells"), r);
            }
        }
        AxiomFamily::Skt => {
            let max = a.max.unwrap_or(6);
            for n in 1..=max {
                let mut carriers = Vec::new();
                for len in 1..=a.max_len {
                    for shape in weak_compositions(n, len) {
                        carriers.push(enumerate_skt(&shape));
                    }
                }
                let r = tally::<KeyFamily, _>(&carriers, n as usize, |c, ws| {
                    check_weak_dual_equivalence(&KeyFamily, c, Some(ws))
                });
                push(format!("standard key tableaux with {n} cells, at most {} rows", a.max_len), r);
            }
        }
        AxiomFamily::Product => {
            let pairs: Vec<(WeakComposition, WeakComposition)> = match (&a.a, &a.b) {
                (Some(x), Some(y)) => vec![(x.clone(), y.clone())],
                _ => {
                    let max = a.max.unwrap_or(4);
                    let mut v = Vec::new();
                    for len in 1..=a.max_len.min(3) {
                        for s in 0..=max {
                            for t in 0..=max - s {
                                for x in weak_compositions(s, len) {
                                    for y in weak_compositions(t, len) {
                                        if a.any_right || y.parts().windows(2).all(|p| p[0] <= p[1]) {
                                            v.push((x.clone(), y));
                                        }
                                    }
                                }
                            }
                        }
                    }
                    v
                }
            };
            for (x, y) in pairs {
                let carrier = enumerate_product_skt(&x, &y)?;
                let n = (x.size() + y.size()) as usize;
                let r =
                    tally::<KeyFamily, _>(&[carrier], n, |c, ws| check_weak_dual_equivalence(&KeyFamily, c, Some(ws)));
                push(format!("standard key tableaux of shape {x} (x) {y}"), r);
            }
        }
    }
    Ok(axiom_report(&sections, a.witnesses))
}

/// Per-window tallies, involution failures and the number of objects.
type Tally = (BTreeMap<(usize, usize), WindowTally>, Vec<Failure>, usize);
type Section = (String, BTreeMap<(usize, usize), WindowTally>, Vec<Failure>, usize);

fn axiom_report(sections: &[Section], witnesses: usize) -> Output {
    let mut text = String::new();
    let mut items = Vec::new();
    let mut passed = true;
    let quiet = sections.len() > 20;
    for (label, windows, involution, objects) in sections {
        let ok = involution.is_empty() && windows.values().all(|t| t.failures.is_empty());
        passed &= ok;
        if quiet && ok {
            continue;
        }
        writeln!(text, "{label}: {objects} objects").expect("string");
        for ((h, i), t) in windows {
            let verdict = if t.failures.is_empty() { "PASS" } else { "FAIL" };
            writeln!(text, "  window ({h},{i}): {verdict} ({} classes, {} failing)", t.classes, t.failures.len())
                .expect("string");
            for f in t.failures.iter().take(witnesses) {
                writeln!(text, "    {}", f.detail).expect("string");
                for m in &f.witness {
                    writeln!(text, "      {}", m.replace('\n', "\n      ")).expect("string");
                    writeln!(text).expect("string");
                }
            }
        }
        let verdict = if involution.is_empty() { "PASS" } else { "FAIL" };
        writeln!(text, "  involutions: {verdict}").expect("string");
        for f in involution.iter().take(witnesses) {
            writeln!(text, "    {}: {}", f.detail, f.witness.join(" / ").replace('\n', " ")).expect("string");
        }
        items.push(json!({
            "carrier": label,
            "objects": objects,
            "passed": ok,
            "windows": windows.iter().map(|((h, i), t)| json!({
                "window": [h, i],
                "classes": t.classes,
                "failures": t.failures.iter().take(witnesses).collect::<Vec<_>>(),
                "failing": t.failures.len(),
            })).collect::<Vec<_>>(),
            "involution_failures": involution.iter().take(witnesses).collect::<Vec<_>>(),
        }));
    }
    if quiet {
        writeln!(text, "{} carriers checked, {} failing", sections.len(), items.len()).expect("string");
    }
    writeln!(text, "overall: {}", if passed { "PASS" } else { "FAIL" }).expect("string");
    let json = json!({"family": "AXIOMS", "passed": passed, "carriers": sections.len(), "reports": items});
    Output::Listing { text, json, passed }
}

/// Every reduced word of length `len` on letters `1..=max_letter`, built by
/// appending letters that keep the word reduced.
fn all_reduced_words(len: usize, max_letter: usize) -> Vec<ReducedWord> {
    fn rec(w: &mut Vec<u32>, word: &mut Vec<u32>, len: usize, out: &mut Vec<ReducedWord>) {
        if word.len() == len {
            out.push(ReducedWord(word.clone()));
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
    let mut w: Vec<u32> = (1..=max_letter as u32 + 1).collect();
    let mut out = Vec::new();
    rec(&mut w, &mut Vec::new(), len, &mut out);
    out
}
