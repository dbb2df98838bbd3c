//! Command-line front end. [`run`] returns the report text; the binary
//! prints it and maps errors to exit codes.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_traits::One;
use rand::rngs::StdRng;
use rand::SeedableRng;
use serde_json::{json, Value as Json};

use crate::algebra::{parse_matrix, parse_matrix_list, AlgebraElement, Matrix};
use crate::analysis::{
    distinctness_certificate, find_scalar_witness, kernel_search_sm2, nonscalar_power_check, prop8_compare,
    root_of_unity_order, witness_root, witness_scalar, Family, KernelReport, Sm3Oracle, UnfaithfulnessWitness,
};
use crate::error::{Error, Result};
use crate::phi::{check_relations_by, tau_power_direct, tau_power_expand, Phi, PhiParams};
use crate::reps::{burau_reduced, burau_unreduced, cyclic_rep, matrix_rep_from_images, permutation_rep, scalar_char};

use crate::scalars::multinomial_coeff;
use crate::words::{lemma9_decompose, strip_v_powers, theorem10_shape, SmWord};
use crate::{random, Rep, Value};

#[derive(Debug, Parser)]
#[command(
    name = "smbraid",
    version,
    about = "Representations Φ_{a,b,c} of the singular braid monoid, in exact arithmetic"
)]
pub struct Cli {
    /// Emit a single JSON document instead of text
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate Φ on a word
    Eval {
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[command(flatten)]
        rep: RepArg,
        #[command(flatten)]
        params: ParamArgs,
        /// Tokens s<k>, S<k>, t<k>, x, X separated by spaces
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Check the seven defining relations on Φ-images
    Relcheck {
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[command(flatten)]
        rep: RepArg,
        #[command(flatten)]
        params: ParamArgs,
        /// Also check this many random rational parameter triples
        #[arg(long, default_value_t = 0)]
        random: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Search for τ_1^p σ_1^q in the kernel on two strands
    Kernel2 {
        #[command(flatten)]
        rep: RepArg,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = 6)]
        pmax: u64,
        #[arg(long, default_value_t = 12)]
        qmax: u64,
        /// formal | matrix | cyclic:<s>:<d_s>
        #[arg(long, value_parser = parse_backend, allow_hyphen_values = true)]
        backend: Option<BackendSel>,
    },
    /// Look for two distinct words with equal image under a one-parameter Φ
    Unfaith {
        /// a00 | 0b0 | 00c
        #[arg(long, value_parser = parse_family)]
        mode: Family,
        /// The nonzero parameter
        #[arg(long, value_parser = parse_scalar, allow_hyphen_values = true)]
        val: Value,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[command(flatten)]
        rep: RepArg,
        #[arg(long, default_value_t = 4)]
        smax: u64,
        #[arg(long, default_value_t = 6)]
        lmax: usize,
        #[arg(long, default_value_t = 8)]
        rmax: u64,
    },
    /// Compare kernels of σ_1 ↦ M and σ_1 ↦ X in K[X]/(X^s - d_s)
    Prop8 {
        /// Matrix file: one row per line, entries comma-separated
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long)]
        s: usize,
        #[arg(long, value_parser = parse_scalar, allow_hyphen_values = true)]
        ds: Value,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = 6)]
        pmax: u64,
        #[arg(long, default_value_t = 12)]
        qmax: u64,
    },
    /// Image of τ_1^p σ_1^q when ρ(σ_1) = d, by multinomial expansion and directly
    Multinomial {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        q: i64,
        #[arg(long, value_parser = parse_scalar, allow_hyphen_values = true)]
        d: Value,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Decide equality of two SM_3 words through the Birman instance
    Wordeq3 {
        #[arg(long, allow_hyphen_values = true)]
        w1: String,
        #[arg(long, allow_hyphen_values = true)]
        w2: String,
    },
    /// Block decomposition and v-power shape of a word
    Shape {
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        p: u64,
        #[arg(long, allow_hyphen_values = true)]
        q: i64,
        /// Optionally check images under this representation
        #[arg(long = "rep", value_parser = parse_rep_sel, allow_hyphen_values = true)]
        rep: Option<RepSel>,
        #[command(flatten)]
        params: ParamArgs,
    },
}

#[derive(Debug, Clone, Args)]
pub struct ParamArgs {
    #[arg(long, default_value = "1", value_parser = parse_scalar, allow_hyphen_values = true)]
    pub a: Value,
    #[arg(long, default_value = "-1", value_parser = parse_scalar, allow_hyphen_values = true)]
    pub b: Value,
    #[arg(long, default_value = "0", value_parser = parse_scalar, allow_hyphen_values = true)]
    pub c: Value,
}

impl ParamArgs {
    fn params(&self) -> PhiParams<Value> {
        PhiParams::new(self.a.clone(), self.b.clone(), self.c.clone())
    }
}

#[derive(Debug, Clone, Args)]
pub struct RepArg {
    /// burau-unreduced | burau-reduced | perm | scalar:<value> | matrix:<file>
    #[arg(long = "rep", default_value = "burau-reduced", value_parser = parse_rep_sel, allow_hyphen_values = true)]
    pub sel: RepSel,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RepSel {
    BurauUnreduced,
    BurauReduced,
    Perm,
    Scalar(Value),
    Matrix(PathBuf),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BackendSel {
    Formal,
    Matrix,
    Cyclic(usize, Value),
}

fn parse_scalar(s: &str) -> std::result::Result<Value, String> {
    s.parse::<Value>().map_err(|e| e.to_string())
}

fn parse_rep_sel(s: &str) -> std::result::Result<RepSel, String> {
    match s {
        "burau-unreduced" => Ok(RepSel::BurauUnreduced),
        "burau-reduced" => Ok(RepSel::BurauReduced),
        "perm" => Ok(RepSel::Perm),
        _ => {
            if let Some(v) = s.strip_prefix("scalar:") {
                parse_scalar(v).map(RepSel::Scalar)
            } else if let Some(path) = s.strip_prefix("matrix:") {
                Ok(RepSel::Matrix(PathBuf::from(path)))
            } else {
                Err(format!("unknown representation '{s}'"))
            }
        }
    }
}

fn parse_backend(s: &str) -> std::result::Result<BackendSel, String> {
    match s {
        "formal" => Ok(BackendSel::Formal),
        "matrix" => Ok(BackendSel::Matrix),
        _ => {
            let rest = s.strip_prefix("cyclic:").ok_or_else(|| format!("unknown backend '{s}'"))?;
            let (s_txt, d_txt) = rest.split_once(':').ok_or("expected cyclic:<s>:<d_s>")?;
            let order = s_txt.parse::<usize>().map_err(|e| format!("bad s '{s_txt}': {e}"))?;
            Ok(BackendSel::Cyclic(order, parse_scalar(d_txt)?))
        }
    }
}

fn parse_family(s: &str) -> std::result::Result<Family, String> {
    match s {
        "a00" => Ok(Family::A),
        "0b0" => Ok(Family::B),
        "00c" => Ok(Family::C),
        _ => Err(format!("unknown mode '{s}', expected a00, 0b0 or 00c")),
    }
}

fn read_file(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

pub fn build_rep(sel: &RepSel, n: usize) -> Result<Rep> {
    match sel {
        RepSel::BurauUnreduced => burau_unreduced(n),
        RepSel::BurauReduced => burau_reduced(n),
        RepSel::Perm => permutation_rep(n),
        RepSel::Scalar(d) => scalar_char(d.clone(), n),
        RepSel::Matrix(path) => matrix_rep_from_images(n, parse_matrix_list(&read_file(path)?)?),
    }
}

fn first_matrix(rep: &Rep) -> Result<Matrix<Value>> {
    match rep.sigma(1)? {
        AlgebraElement::Matrix(m) => Ok(m.clone()),
        _ => Err(Error::BackendMismatch(format!("{} has no matrix image", rep.label()))),
    }
}

fn with_backend(rep: Rep, backend: &Option<BackendSel>) -> Result<Rep> {
    match backend {
        None => Ok(rep),
        Some(BackendSel::Formal) => rep.into_formal(),
        Some(BackendSel::Matrix) => {
            first_matrix(&rep)?;
            Ok(rep)
        }
        Some(BackendSel::Cyclic(s, d_s)) => {
            let m = first_matrix(&rep)?;
            if m.pow(*s as u64) != Matrix::scalar(m.dim(), d_s.clone()) {
                return Err(Error::Precondition(format!("rho(s1)^{s} != ({d_s}) I")));
            }
            cyclic_rep(*s, d_s.clone())
        }
    }
}

fn pair(p: u64, q: i64) -> Json {
    json!([p, q])
}

fn report_json(r: &KernelReport) -> Json {
    let mut obj = json!({
        "bounds": { "p_max": r.p_max, "q_max": r.q_max },
        "hits": r.hits.iter().map(|&(p, q)| pair(p, q)).collect::<Vec<_>>(),
        "braid_hits": r.braid_hits,
        "cyclic_ok": r.cyclic_ok,
        "bounded": r.bounded,
    });
    if let Some((p, q)) = r.minimal_generator {
        obj["minimal_generator"] = pair(p, q);
    }
    obj
}

fn report_text(r: &KernelReport, out: &mut String) {
    let fmt = |v: &[(u64, i64)]| v.iter().map(|(p, q)| format!("({p}, {q})")).collect::<Vec<_>>().join(" ");
    let _ = writeln!(out, "bounds: 0 <= p <= {}, |q| <= {} (bounded search)", r.p_max, r.q_max);
    let _ = writeln!(out, "hits: {}", if r.hits.is_empty() { "none".into() } else { fmt(&r.hits) });
    if !r.braid_hits.is_empty() {
        let qs: Vec<String> = r.braid_hits.iter().map(|q| q.to_string()).collect();
        let _ = writeln!(out, "braid kernel (p = 0): q in {{{}}}", qs.join(", "));
    }
    match r.minimal_generator {
        Some((p, q)) => {
            let _ = writeln!(out, "minimal generator: ({p}, {q})");
            let _ = writeln!(out, "cyclic structure: {}", if r.cyclic_ok { "ok" } else { "FAILED" });
        }
        None => {
            let _ = writeln!(out, "minimal generator: none");
        }
    }
}

fn witness_json(w: &UnfaithfulnessWitness<Value>) -> Json {
    json!({
        "w1": w.w1.to_string(),
        "w2": w.w2.to_string(),
        "certificate": w.certificate.to_string(),
        "image": w.image.to_string(),
    })
}

fn kernel_witnesses(phi: &Phi<Value>, r: &KernelReport) -> Result<Vec<UnfaithfulnessWitness<Value>>> {
    let mut out = Vec::new();
    let empty = SmWord::identity(2);
    if let Some((p, q)) = r.minimal_generator {
        out.push(UnfaithfulnessWitness::new(phi, SmWord::tau_sigma(2, p, q), empty.clone())?);
    }
    if let Some(&q) = r.braid_hits.first() {
        out.push(UnfaithfulnessWitness::new(phi, SmWord::tau_sigma(2, 0, q), empty)?);
    }
    Ok(out)
}

fn render(json_mode: bool, doc: Json, text: String) -> String {
    if json_mode {
        let mut s = serde_json::to_string_pretty(&doc).expect("JSON values serialize");
        s.push('\n');
        s
    } else {
        text
    }
}

/// Outcome of a command: report text and whether the checked property held.
pub struct Outcome {
    pub output: String,
    pub ok: bool,
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let json_mode = cli.json;
    let done = |doc: Json, text: String| Outcome { output: render(json_mode, doc, text), ok: true };
    match &cli.command {
        Command::Eval { n, rep, params, word } => {
            let w = SmWord::parse(word, *n)?;
            let phi = Phi::new(build_rep(&rep.sel, *n)?, params.params())?;
            let img = phi.eval(&w)?;
            let doc = json!({
                "rep": phi.rep().label(),
                "params": [params.a.to_string(), params.b.to_string(), params.c.to_string()],
                "word": w.to_string(),
                "image": img.to_string(),
                "is_identity": img.is_identity(),
                "is_zero": img.is_zero(),
            });
            let text = format!("image: {img}\nidentity: {}\nzero: {}\n", img.is_identity(), img.is_zero());
            Ok(done(doc, text))
        }
        Command::Relcheck { n, rep, params, random: count, seed } => {
            let rep = build_rep(&rep.sel, *n)?;
            let phi = Phi::new(rep.clone(), params.params())?;
            let report = phi.check_relations()?;
            let mut ok = report.all_pass();
            let mut text = report.to_string();
            let mut rng = StdRng::seed_from_u64(*seed);
            let mut random_pass = 0;
            let mut random_failures = Vec::new();
            for _ in 0..*count {
                let p: PhiParams<Value> = random::params(&mut rng);
                let phi = Phi::new(rep.clone(), p.clone())?;
                let r = check_relations_by(*n, |w| phi.eval(w), |w| phi.eval(w))?;
                if r.all_pass() {
                    random_pass += 1;
                } else {
                    random_failures.push(p.to_string());
                }
            }
            if *count > 0 {
                let _ = writeln!(text, "random parameters (seed {seed}): {random_pass}/{count} pass");
                for p in &random_failures {
                    let _ = writeln!(text, "FAIL parameters {p}");
                }
                ok &= random_failures.is_empty();
            }
            let failures: Vec<Json> = report
                .failures()
                .map(|c| json!({ "relation": c.instance.to_string(), "lhs": c.lhs.to_string(), "rhs": c.rhs.to_string() }))
                .collect();
            let doc = json!({
                "rep": rep.label(),
                "n": n,
                "families_passed": report.families_passed(),
                "families_total": 7,
                "instances": report.checks.len(),
                "failures": failures,
                "random": { "count": count, "seed": seed, "passed": random_pass, "failed": random_failures },
            });
            Ok(Outcome { output: render(json_mode, doc, text), ok })
        }
        Command::Kernel2 { rep, params, pmax, qmax, backend } => {
            let base = build_rep(&rep.sel, 2)?;
            // Exponents of ρ(σ_1) reached by the search stay within pmax + qmax.
            let s_max = pmax + qmax;
            let nonscalar = match base.sigma(1)? {
                AlgebraElement::Matrix(_) => Some(nonscalar_power_check(&base, s_max)?),
                _ => None,
            };
            let phi = Phi::new(with_backend(base, backend)?, params.params())?;
            let report = kernel_search_sm2(&phi, *pmax, *qmax)?;
            let witnesses = kernel_witnesses(&phi, &report)?;
            let flagged = nonscalar == Some(true) && !(report.hits.is_empty() && report.braid_hits.is_empty());
            let mut doc = report_json(&report);
            doc["rep"] = json!(phi.rep().label());
            doc["backend"] = json!(phi.rep().backend().name());
            doc["witnesses"] = witnesses.iter().map(witness_json).collect();
            doc["nonscalar_powers"] = json!({ "s_max": s_max, "holds": nonscalar });
            doc["flagged"] = json!(flagged);
            let mut text = String::new();
            report_text(&report, &mut text);
            for w in &witnesses {
                let _ = writeln!(text, "witness: {w}");
            }
            if flagged {
                let _ = writeln!(text, "flag: kernel hits although no rho(s1)^s with 1 <= s <= {s_max} is scalar");
            }
            Ok(done(doc, text))
        }
        Command::Unfaith { mode, val, n, rep, smax, lmax, rmax } => {
            let rep = build_rep(&rep.sel, *n)?;
            let root = root_of_unity_order(val, *rmax)?;
            let mut text = String::new();
            let (witness, search) = match root {
                Some(r) => {
                    let _ = writeln!(text, "{val} is a root of unity of order {r}");
                    (Some(witness_root(&rep, *mode, val, r)?), Json::Null)
                }
                None => {
                    let _ = writeln!(text, "{val} is not a root of unity of order <= {rmax}");
                    let found = find_scalar_witness(&rep, val, *smax, *lmax)?;
                    let search = json!({
                        "s_max": smax,
                        "len_max": lmax,
                        "found": found.as_ref().map(|(v, s)| json!({ "v": v.to_string(), "s": s })),
                    });
                    match found {
                        Some((v, s)) => {
                            let _ = writeln!(text, "rho({v}) = ({val})^-{s}");
                            (Some(witness_scalar(&rep, *mode, val, &v, s)?), search)
                        }
                        None => {
                            let _ = writeln!(
                                text,
                                "no braid v with rho(v) = ({val})^-s for 0 < |s| <= {smax}, length <= {lmax} (bounded search)"
                            );
                            (None, search)
                        }
                    }
                }
            };
            if let Some(w) = &witness {
                let _ = writeln!(text, "witness: {w}");
            }
            let doc = json!({
                "mode": mode.to_string(),
                "val": val.to_string(),
                "rep": rep.label(),
                "root_order": root,
                "search": search,
                "witnesses": witness.iter().map(witness_json).collect::<Vec<_>>(),
                "bounded": true,
            });
            Ok(done(doc, text))
        }
        Command::Prop8 { matrix, s, ds, params, pmax, qmax } => {
            let m: Matrix<Value> = parse_matrix(&read_file(matrix)?)?;
            let cmp = prop8_compare(&m, *s, ds, &params.params(), *pmax, *qmax)?;
            let mut text = String::from("matrix backend:\n");
            report_text(&cmp.matrix, &mut text);
            text.push_str("cyclic backend:\n");
            report_text(&cmp.cyclic, &mut text);
            let _ = writeln!(text, "kernels equal: {}", cmp.equal);
            let doc =
                json!({ "matrix": report_json(&cmp.matrix), "cyclic": report_json(&cmp.cyclic), "equal": cmp.equal });
            Ok(Outcome { output: render(json_mode, doc, text), ok: cmp.equal })
        }
        Command::Multinomial { p, q, d, params } => {
            let pr = params.params();
            let expand = tau_power_expand(&pr, d, *p, *q)?;
            let direct = tau_power_direct(&pr, d, *p, *q)?;
            let coeffs: Vec<Json> = (0..=*p)
                .flat_map(|i| (0..=p - i).map(move |j| (i, j, p - i - j)))
                .map(|(i, j, k)| {
                    Ok(json!({ "i": i, "j": j, "k": k, "coeff": multinomial_coeff(*p, i, j, k)?.to_string() }))
                })
                .collect::<Result<_>>()?;
            let agree = expand == direct;
            let text =
                format!("expansion: {expand}\ndirect: {direct}\nagree: {agree}\nkernel element: {}\n", expand.is_one());
            let doc = json!({
                "p": p,
                "q": q,
                "d": d.to_string(),
                "expansion": expand.to_string(),
                "direct": direct.to_string(),
                "agree": agree,
                "is_one": expand.is_one(),
                "terms": coeffs,
            });
            Ok(Outcome { output: render(json_mode, doc, text), ok: agree })
        }
        Command::Wordeq3 { w1, w2 } => {
            let (x, y) = (SmWord::parse(w1, 3)?, SmWord::parse(w2, 3)?);
            let equal = Sm3Oracle::<Value>::new()?.equal(&x, &y)?;
            let cert = distinctness_certificate(&x, &y);
            let mut text = format!("{}\n", if equal { "equal" } else { "distinct" });
            if let Some(c) = &cert {
                let _ = writeln!(text, "certificate: {c}");
            }
            let doc = json!({
                "w1": x.to_string(),
                "w2": y.to_string(),
                "equal": equal,
                "certificate": cert.map(|c| c.to_string()),
            });
            Ok(done(doc, text))
        }
        Command::Shape { n, word, p, q, rep, params } => {
            let w = SmWord::parse(word, *n)?;
            let l9 = lemma9_decompose(&w);
            let sf = theorem10_shape(&w, *p, *q)?;
            let stripped = strip_v_powers(&sf);
            let mut text = String::new();
            let _ = writeln!(text, "v = {}", sf.v());
            if let Some(u0) = l9.leading_conjugator() {
                let _ = writeln!(text, "leading conjugator: {u0}");
            }
            for b in &sf.blocks {
                let _ = writeln!(text, "block: r = {}, m = {}, u = [{}]", b.r, b.m, b.braid);
            }
            let _ = writeln!(text, "assembled: {}", sf.assemble());
            let _ = writeln!(text, "stripped: {stripped}");
            let mut doc = json!({
                "word": w.to_string(),
                "v": sf.v().to_string(),
                "lemma9": l9.blocks.iter().map(|b| json!({ "r": b.tau_power, "u": b.braid.to_string() })).collect::<Vec<_>>(),
                "shape": sf.blocks.iter().map(|b| json!({ "r": b.r, "m": b.m, "u": b.braid.to_string() })).collect::<Vec<_>>(),
                "assembled": sf.assemble().to_string(),
                "stripped": stripped.to_string(),
            });
            let mut ok = true;
            if let Some(sel) = rep {
                let phi = Phi::new(build_rep(sel, *n)?, params.params())?;
                let v_in_kernel = phi.is_kernel_element(&sf.v())?;
                let assembled_same = phi.eval(&sf.assemble())? == phi.eval(&w)?;
                let stripped_same = phi.eval(&stripped)? == phi.eval(&w)?;
                ok = assembled_same && (!v_in_kernel || stripped_same);
                let _ = writeln!(text, "v in kernel: {v_in_kernel}");
                let _ = writeln!(text, "assembled image equal: {assembled_same}");
                let _ = writeln!(text, "stripped image equal: {stripped_same}");
                doc["images"] = json!({
                    "rep": phi.rep().label(),
                    "v_in_kernel": v_in_kernel,
                    "assembled_equal": assembled_same,
                    "stripped_equal": stripped_same,
                });
            }
            Ok(Outcome { output: render(json_mode, doc, text), ok })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Result<Outcome> {
        let cli = Cli::try_parse_from(std::iter::once("smbraid").chain(args.iter().copied())).unwrap();
        run(&cli)
    }

    #[test]
    fn selectors() {
        assert_eq!(parse_rep_sel("scalar:-t").unwrap(), RepSel::Scalar("-t".parse().unwrap()));
        assert!(parse_rep_sel("lkb").is_err());
        assert_eq!(parse_backend("cyclic:2:-2").unwrap(), BackendSel::Cyclic(2, Value::from(-2)));
        assert!(parse_backend("cyclic:x:1").is_err());
        assert!(parse_family("abc").is_err());
    }

    #[test]
    fn eval_zero_parameters() {
        let out =
            run_args(&["eval", "--n", "2", "--rep", "scalar:2", "--a", "0", "--b", "0", "--c", "0", "--word", "t1 s1"])
                .unwrap();
        assert!(out.output.contains("zero: true"), "{}", out.output);
    }

    #[test]
    fn relcheck_text() {
        let out = run_args(&["relcheck", "--n", "3", "--rep", "burau-unreduced", "--a", "1", "--b", "-1", "--c", "0"])
            .unwrap();
        assert_eq!(out.output.lines().next(), Some("7/7 relation families pass"));
        assert!(out.ok);
    }

    #[test]
    fn kernel2_json() {
        let out = run_args(&[
            "kernel2", "--rep", "scalar:2", "--a", "2", "--b", "0", "--c", "0", "--pmax", "6", "--qmax", "12", "--json",
        ])
        .unwrap();
        let doc: Json = serde_json::from_str(&out.output).unwrap();
        assert_eq!(doc["minimal_generator"], json!([1, -2]));
        assert_eq!(doc["hits"].as_array().unwrap().len(), 6);
        assert_eq!(doc["witnesses"][0]["w1"], json!("t1 S1 S1"));
    }

    #[test]
    fn backend_switches() {
        let out = run_args(&[
            "kernel2",
            "--rep",
            "scalar:2",
            "--a",
            "2",
            "--b",
            "0",
            "--c",
            "0",
            "--backend",
            "cyclic:1:2",
            "--json",
        ])
        .unwrap();
        let doc: Json = serde_json::from_str(&out.output).unwrap();
        assert_eq!(doc["minimal_generator"], json!([1, -2]));
        let out = run_args(&[
            "kernel2",
            "--rep",
            "scalar:2",
            "--a",
            "2",
            "--b",
            "0",
            "--c",
            "0",
            "--backend",
            "formal",
            "--json",
        ])
        .unwrap();
        let doc: Json = serde_json::from_str(&out.output).unwrap();
        assert_eq!(doc["minimal_generator"], json!([1, -2]));
        assert!(run_args(&["kernel2", "--rep", "perm", "--backend", "matrix"]).is_err());
        assert!(run_args(&["kernel2", "--rep", "scalar:2", "--backend", "cyclic:2:2"]).is_err());
    }
}
