use std::fmt::Write as _;
use std::path::Path;

use serde_json::json;
use tymrep::laurent::{names_in, parse, parse_infer, Specialization};
use tymrep::long_moody::{
    decompose_check, eta, irreducibility_probe, kernel_experiment, lm_apply, lm_q, lm_q_semidirect, lm_semidirect,
    reduced_lm3, tym_tq,
};
use tymrep::matrix::specialize_matrix;
use tymrep::reps::{burau, one_dim, tym, wtym};
use tymrep::stringlink::{kernel_agreement, tym_matrix_with, KernelTheorem, LinkingProfile};
use tymrep::{BraidWord, Diagram, LaurentPoly, Mode, PolyMatrix, PolyRep, RingContext};

use crate::output::{int_table, mark, matrix_json, Format, Report};
use crate::Failure;

pub fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Domain(format!("cannot read {}: {e}", path.display())))
}

pub fn read_word(path: &Path) -> Result<BraidWord, Failure> {
    Ok(BraidWord::parse(&read(path)?)?)
}

fn unit(src: &str) -> Result<LaurentPoly, Failure> {
    Ok(parse_infer(src)?)
}

/// `onedim:<unit>` and similar `<kind>:<argument>` names.
fn split_arg(name: &str) -> (&str, Option<&str>) {
    match name.split_once(':') {
        Some((k, a)) => (k, Some(a)),
        None => (name, None),
    }
}

fn strands_arg(kind: &str, arg: Option<&str>) -> Result<usize, Failure> {
    let a = arg.ok_or_else(|| Failure::Domain(format!("`{kind}` needs a strand count, e.g. `{kind}:3`")))?;
    a.parse().map_err(|_| Failure::Parse(format!("bad strand count `{a}`")))
}

fn named_rep(name: &str, n: usize) -> Result<PolyRep, Failure> {
    Ok(match split_arg(name) {
        ("burau", None) => burau(n)?,
        ("tym", None) => tym(n)?,
        ("wtym", None) => wtym(n)?,
        ("reduced-lm3", None) if n == 3 => reduced_lm3()?,
        ("reduced-lm3", None) => return Err(Failure::Domain(format!("reduced-lm3 acts on 3 strands, word has {n}"))),
        ("onedim", Some(r)) => one_dim(n, &unit(r)?)?,
        _ => return Err(Failure::Domain(format!("unknown representation `{name}`"))),
    })
}

/// Builds the substitution from `var=poly` pairs. Unmapped variables map to
/// themselves and pairs naming variables outside `source` are skipped.
fn substitution(source: &tymrep::Ctx, pairs: &[String]) -> Result<Specialization, Failure> {
    let mut given: Vec<(String, String)> = Vec::new();
    for p in pairs {
        let (v, e) = p.split_once('=').ok_or_else(|| Failure::Parse(format!("expected `var=poly`, got `{p}`")))?;
        given.push((v.trim().to_string(), e.trim().to_string()));
    }
    let images: Vec<(String, String)> = source
        .names()
        .iter()
        .map(|n| {
            let img = given.iter().rev().find(|(v, _)| v == n).map_or_else(|| n.clone(), |(_, e)| e.clone());
            (n.clone(), img)
        })
        .collect();
    let mut target_names = std::collections::BTreeSet::new();
    for (_, img) in &images {
        target_names.extend(names_in(img)?);
    }
    let target = RingContext::new(&target_names.into_iter().collect::<Vec<_>>())?;
    let parsed =
        images.iter().map(|(n, img)| Ok((n.as_str(), parse(img, &target)?))).collect::<Result<Vec<_>, Failure>>()?;
    Ok(Specialization::new(source, &target, &parsed)?)
}

fn matrix_report(f: Format, title: &str, m: &PolyMatrix, extra: serde_json::Value) -> Report {
    match f {
        Format::Text => Report::ok(m.to_string()),
        Format::Json => {
            let mut v = json!({ "title": title, "matrix": matrix_json(m) });
            if let (Some(o), serde_json::Value::Object(e)) = (v.as_object_mut(), extra) {
                o.extend(e);
            }
            Report::json(&v, true)
        }
    }
}

pub fn eval(f: Format, rep: &str, word: &Path, spec: &[String]) -> Result<Report, Failure> {
    let w = read_word(word)?;
    let r = named_rep(rep, w.strands())?;
    let mut m = r.evaluate(&w)?;
    if let (Some(ctx), false) = (r.ctx(), spec.is_empty()) {
        m = specialize_matrix(&m, &substitution(ctx, spec)?)?;
    }
    Ok(matrix_report(f, r.name(), &m, json!({ "word": w.render().trim_end() })))
}

pub fn invariant(f: Format, mode: Mode, d: &Diagram, correct: bool) -> Result<Report, Failure> {
    let m = tym_matrix_with(d, mode, correct)?;
    let ring = mode.ctx(d.strands()).names().to_vec();
    Ok(matrix_report(f, mode.name(), &m, json!({ "mode": mode.name(), "ring": ring, "corrected": correct })))
}

pub fn linking(f: Format, d: &Diagram) -> Result<Report, Failure> {
    let p = LinkingProfile::from_diagram(d);
    let n = p.strands();
    let table = |g: &dyn Fn(usize, usize) -> i64| -> Vec<Vec<i64>> {
        (0..n).map(|i| (0..n).map(|j| g(i, j)).collect()).collect()
    };
    let over = table(&|i, j| p.over(i, j));
    let virt = table(&|i, j| p.virtual_count(i, j));
    let lk2 = table(&|i, j| if i == j { 0 } else { p.linking_doubled(i, j) });
    Ok(match f {
        Format::Text => {
            let mut s = format!("strands {n}\npure {}\n", d.is_pure());
            let _ = write!(
                s,
                "over\n{}virtual\n{}linking (doubled)\n{}",
                int_table(&over),
                int_table(&virt),
                int_table(&lk2)
            );
            Report::ok(s)
        }
        Format::Json => Report::json(
            &json!({ "strands": n, "pure": d.is_pure(), "over": over, "virtual": virt, "linking_doubled": lk2 }),
            true,
        ),
    })
}

pub fn kernel_check(f: Format, thm: &str, d: &Diagram) -> Result<Report, Failure> {
    let which: KernelTheorem = thm.parse()?;
    let (pred, ident) = kernel_agreement(d, which)?;
    let agree = pred == ident;
    Ok(match f {
        Format::Text => Report {
            out: format!(
                "theorem {which}\nmode {}\npredicate {pred}\nidentity {ident}\n{}\n",
                which.mode(),
                mark(agree)
            ),
            ok: agree,
        },
        Format::Json => Report::json(
            &json!({ "theorem": which.code(), "mode": which.mode().name(), "predicate": pred, "identity": ident, "agree": agree }),
            agree,
        ),
    })
}

pub fn lm_build(f: Format, source: &str, n: usize, q_twist: bool) -> Result<Report, Failure> {
    let rep = match (split_arg(source), q_twist) {
        (("tym", None), false) => lm_apply(&tym(n + 1)?)?,
        (("tym", None), true) => lm_q(&tym_tq(n + 1)?)?,
        (("burau", None), false) => lm_apply(&burau(n + 1)?)?,
        (("burau", None), true) => lm_q(&burau(n + 1)?)?,
        (("onedim", Some(r)), false) => lm_apply(&one_dim(n + 1, &unit(r)?)?)?,
        (("onedim", Some(r)), true) => lm_q(&one_dim(n + 1, &unit(r)?)?)?,
        (("eta", None), false) => lm_semidirect(&eta(n)?)?,
        (("eta", None), true) => lm_q_semidirect(&eta(n)?)?,
        _ => return Err(Failure::Domain(format!("unknown source `{source}`"))),
    };
    let sigma: Vec<&PolyMatrix> = (1..rep.strands()).map(|i| rep.sigma(i)).collect();
    Ok(match f {
        Format::Text => {
            let mut s = format!("# {} on B_{}, dimension {}\n", rep.name(), rep.strands(), rep.dim());
            for (i, m) in sigma.iter().enumerate() {
                let _ = write!(s, "sigma_{}\n{m}", i + 1);
            }
            Report::ok(s)
        }
        Format::Json => Report::json(
            &json!({
                "name": rep.name(),
                "strands": rep.strands(),
                "dim": rep.dim(),
                "sigma": sigma.iter().map(|m| matrix_json(m)).collect::<Vec<_>>(),
            }),
            true,
        ),
    })
}

pub fn lm_decompose(f: Format, n: usize) -> Result<Report, Failure> {
    let r = decompose_check(n)?;
    Ok(match f {
        Format::Text => {
            let mut s = format!("n {n}: blocks {} + {}\n", r.first_block, r.second_block);
            for g in &r.generators {
                let _ = writeln!(
                    s,
                    "{} sigma_{} block_diagonal={} burau_block={} eta_block={}",
                    mark(g.passed()),
                    g.index,
                    g.block_diagonal,
                    g.burau_block,
                    g.eta_block
                );
            }
            Report { out: s, ok: r.passed() }
        }
        Format::Json => {
            let gens: Vec<_> = r
                .generators
                .iter()
                .map(|g| json!({ "index": g.index, "block_diagonal": g.block_diagonal, "burau_block": g.burau_block, "eta_block": g.eta_block }))
                .collect();
            Report::json(
                &json!({ "n": n, "first_block": r.first_block, "second_block": r.second_block, "generators": gens, "passed": r.passed() }),
                r.passed(),
            )
        }
    })
}

fn probe_rep(name: &str) -> Result<PolyRep, Failure> {
    Ok(match split_arg(name) {
        ("reduced-lm3", None) => reduced_lm3()?,
        (k @ "burau", a) => burau(strands_arg(k, a)?)?,
        (k @ "tym", a) => tym(strands_arg(k, a)?)?,
        (k @ "lm-eta", a) => lm_q_semidirect(&eta(strands_arg(k, a)?)?)?,
        (k @ "lm-tym", a) => lm_q(&tym_tq(strands_arg(k, a)? + 1)?)?,
        _ => return Err(Failure::Domain(format!("unknown representation `{name}`"))),
    })
}

pub fn lm_irreducible(f: Format, rep: &str, prime: u64, trials: usize, seed: u64) -> Result<Report, Failure> {
    let r = irreducibility_probe(&probe_rep(rep)?, prime, trials, seed)?;
    let verdict = if r.irreducible() {
        "absolutely irreducible at a specialization"
    } else {
        "no full-span specialization found"
    };
    Ok(match f {
        Format::Text => {
            let mut s = format!("{} (dimension {}) over F_{}, seed {seed}\n", r.rep, r.dim, r.prime);
            for (k, t) in r.trials.iter().enumerate() {
                let vals: Vec<String> = t.values.iter().map(|(n, v)| format!("{n}={v}")).collect();
                let _ = writeln!(s, "trial {}: {} span {}/{}", k + 1, vals.join(" "), t.span_dim, r.dim * r.dim);
            }
            let _ = writeln!(s, "{verdict}");
            Report::ok(s)
        }
        Format::Json => {
            let ts: Vec<_> = r
                .trials
                .iter()
                .map(|t| json!({ "values": t.values.iter().map(|(n, v)| (n.clone(), json!(v))).collect::<serde_json::Map<_, _>>(), "span_dim": t.span_dim }))
                .collect();
            Report::json(
                &json!({ "rep": r.rep, "dim": r.dim, "prime": r.prime, "seed": seed, "trials": ts, "irreducible": r.irreducible() }),
                true,
            )
        }
    })
}

pub fn lm_kernel_words(f: Format) -> Result<Report, Failure> {
    let rows = kernel_experiment()?;
    let ok = rows.iter().all(|r| r.as_expected());
    Ok(match f {
        Format::Text => {
            let mut s = String::from("word     n  length  Bur=I  LM(TYM)=I  twisted=I  twisted dim\n");
            for r in &rows {
                let _ = writeln!(
                    s,
                    "{:<8} {:<2} {:<7} {:<6} {:<10} {:<10} {:<4} {}",
                    r.name,
                    r.strands,
                    r.length,
                    r.burau_identity,
                    r.lm_identity,
                    r.twisted_identity,
                    r.twisted_dim,
                    mark(r.as_expected())
                );
            }
            Report { out: s, ok }
        }
        Format::Json => {
            let js: Vec<_> = rows
                .iter()
                .map(|r| {
                    json!({
                        "word": r.name, "strands": r.strands, "length": r.length,
                        "burau_identity": r.burau_identity, "lm_identity": r.lm_identity,
                        "twisted_identity": r.twisted_identity, "twisted_dim": r.twisted_dim,
                    })
                })
                .collect();
            Report::json(&json!({ "rows": js, "passed": ok }), ok)
        }
    })
}
