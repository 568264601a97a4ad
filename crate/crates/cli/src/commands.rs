use std::io::{BufWriter, Write};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use schur_toeplitz::document::{AnySymbol, Backend, FromLiteral};
use schur_toeplitz::partitions::skew_pieri;
use schur_toeplitz::schur::skew_schur;
use schur_toeplitz::scalar::relative_deviation;
use schur_toeplitz::{
    AdjMethod, DetMethod, ElemSeq, EigenRequest, HomSeq, LaurentSpec, MinorRequest, MinorVariant, Partition,
    Rational, RootList, Scalar, ScaledComplex, SkewPartition,
};

use crate::{CliError, CliResult, EntryArgs, SymbolArgs};

/// Runs `$body` with `$a` bound to the symbol on whichever backend it lives.
macro_rules! on_backend {
    ($sym:expr, $a:ident => $body:expr) => {
        match $sym {
            AnySymbol::Exact($a) => $body,
            AnySymbol::Float($a) => $body,
        }
    };
}

fn emit(value: Value) {
    println!("{value}");
}

fn backend_name(sym: &AnySymbol) -> &'static str {
    match sym {
        AnySymbol::Exact(_) => "exact",
        AnySymbol::Float(_) => "float",
    }
}

fn parse_backend(s: &str) -> CliResult<Backend> {
    Backend::parse(s).ok_or_else(|| CliError::Input(format!("unknown backend {s:?} (auto, exact, float)")))
}

fn load(args: &SymbolArgs, extra: &[&str]) -> CliResult<AnySymbol> {
    let doc = args.read_document()?;
    Ok(doc.build(parse_backend(&args.backend)?, extra)?)
}

fn split_list(s: &str) -> Vec<&str> {
    s.split(',').map(str::trim).filter(|t| !t.is_empty()).collect()
}

fn parse_indices(s: &str) -> CliResult<Vec<usize>> {
    split_list(s)
        .into_iter()
        .map(|t| t.parse().map_err(|_| CliError::Input(format!("bad index {t:?}"))))
        .collect()
}

fn parse_scalars<S: FromLiteral>(s: &str) -> CliResult<Vec<S>> {
    split_list(s)
        .into_iter()
        .map(|t| S::from_literal(t).map_err(CliError::from))
        .collect()
}

/// `"5,4,2"`, `"(5,4,2)"` or `"5 4 2"`.
fn parse_partition(s: &str) -> CliResult<Partition> {
    let body = s.trim().trim_start_matches('(').trim_end_matches(')');
    let parts = body
        .split([',', ' '])
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<i64>().map_err(|_| CliError::Input(format!("bad part {t:?} in {s:?}"))))
        .collect::<CliResult<Vec<i64>>>()?;
    Ok(Partition::from_signed(&parts)?)
}

fn parse_shape(s: &str, inner: Option<&str>) -> CliResult<SkewPartition> {
    let (outer, embedded) = match s.split_once('/') {
        Some((o, i)) => (o, Some(i)),
        None => (s, None),
    };
    let inner = match (embedded, inner) {
        (Some(_), Some(_)) => return Err(CliError::Input("inner shape given twice".into())),
        (Some(i), None) | (None, Some(i)) => parse_partition(i)?,
        (None, None) => Partition::empty(),
    };
    Ok(SkewPartition::new(parse_partition(outer)?, inner))
}

fn agree<S: Scalar>(a: &S, b: &S) -> bool {
    if S::EXACT {
        return a == b;
    }
    let diff = (a.clone() - b.clone()).log2_abs();
    let scale = a.log2_abs().max(b.log2_abs());
    scale == f64::NEG_INFINITY || diff - scale <= 1e-8f64.log2()
}

/// `|x|` as text, exact on the rational backend.
fn abs_text<S: Scalar>(x: &S) -> String {
    if S::EXACT {
        x.render().trim_start_matches('-').to_string()
    } else {
        format!("{:e}", x.abs_f64())
    }
}

fn render_all<S: Scalar>(v: &[S]) -> Vec<String> {
    v.iter().map(Scalar::render).collect()
}

pub fn det(args: &SymbolArgs, n: usize, method: &str) -> CliResult<()> {
    let sym = load(args, &[])?;
    let backend = backend_name(&sym);
    let methods: Vec<DetMethod> = if method == "all" {
        DetMethod::ALL.to_vec()
    } else {
        vec![DetMethod::parse(method).ok_or_else(|| CliError::Input(format!("unknown method {method:?}")))?]
    };
    on_backend!(sym, a => {
        if methods.len() == 1 {
            let start = Instant::now();
            let value = a.determinant(n, methods[0])?;
            emit(json!({
                "n": n,
                "value": value.render(),
                "method": methods[0].name(),
                "backend": backend,
                "timings": {"seconds": start.elapsed().as_secs_f64()},
            }));
            return Ok(());
        }
        let mut rows = Vec::new();
        let mut values = Vec::new();
        for m in methods {
            let start = Instant::now();
            match a.determinant(n, m) {
                Ok(v) => {
                    rows.push(json!({"method": m.name(), "value": v.render(), "seconds": start.elapsed().as_secs_f64()}));
                    values.push(v);
                }
                Err(e) => rows.push(json!({"method": m.name(), "error": e.to_string()})),
            }
        }
        let Some(first) = values.first() else {
            return Err(CliError::Math("no determinant method succeeded".into()));
        };
        emit(json!({
            "n": n,
            "value": first.render(),
            "method": "all",
            "backend": backend,
            "agree": values.iter().all(|v| agree(first, v)),
            "methods": rows,
        }));
        Ok(())
    })
}

pub fn minor(args: &SymbolArgs, n: usize, rows: &str, cols: &str, variant: &str) -> CliResult<()> {
    let variant = match variant {
        "expanded" => MinorVariant::Expanded,
        "flipped" => MinorVariant::Flipped,
        other => return Err(CliError::Input(format!("unknown variant {other:?} (expanded, flipped)"))),
    };
    let req = MinorRequest::new(n, parse_indices(rows)?, parse_indices(cols)?)?;
    let sym = load(args, &[])?;
    let backend = backend_name(&sym);
    on_backend!(sym, a => {
        let (expanded, flipped) = req.shapes(a.p())?;
        let value = a.minor(&req, variant)?;
        emit(json!({
            "n": n,
            "value": value.render(),
            "variant": if variant == MinorVariant::Expanded { "expanded" } else { "flipped" },
            "backend": backend,
            "sign": if req.sign_is_negative(a.p()) { -1 } else { 1 },
            "shapes": {"expanded": expanded.to_string(), "flipped": flipped.to_string()},
        }));
        Ok(())
    })
}

pub fn entries(args: &EntryArgs, inverse: bool) -> CliResult<()> {
    let method = AdjMethod::parse(&args.method)
        .ok_or_else(|| CliError::Input(format!("unknown method {:?}", args.method)))?;
    let sym = load(&args.sym, &[])?;
    let n = args.n;
    on_backend!(sym, a => {
        if args.full {
            let values = if inverse {
                let m = a.inverse_matrix(n)?;
                (0..n * n).map(|k| m.get(k / n, k % n).clone()).collect()
            } else {
                a.adjugate_entries(n, method)?
            };
            stream_entries(n, &values);
            return Ok(());
        }
        let (r, s) = (args.r.unwrap_or(0), args.s.unwrap_or(0));
        let value = if inverse { a.inverse_entry(n, r, s)? } else { a.adjugate_entry(n, r, s, method)? };
        let mut out = json!({"n": n, "r": r, "s": s, "value": value.render()});
        if !inverse {
            out["method"] = json!(method.name());
        }
        emit(out);
        Ok(())
    })
}

fn stream_entries<S: Scalar>(n: usize, values: &[S]) {
    let stdout = std::io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    for (k, v) in values.iter().enumerate() {
        let line = json!({"r": k / n + 1, "s": k % n + 1, "value": v.render()});
        if writeln!(out, "{line}").is_err() {
            return;
        }
    }
    let _ = out.flush();
}

pub fn eig(args: &SymbolArgs, n: usize, x: &str, roots: Option<&str>) -> CliResult<()> {
    let mut extra = vec![x];
    if let Some(r) = roots {
        extra.extend(split_list(r));
    }
    let sym = load(args, &extra)?;
    let backend = backend_name(&sym);
    on_backend!(sym, a => eig_on(&a, backend, n, x, roots))
}

fn eig_on<S: FromLiteral>(a: &LaurentSpec<S>, backend: &str, n: usize, x: &str, roots: Option<&str>) -> CliResult<()> {
    let x = S::from_literal(x)?;
    let mut req = EigenRequest::new(n, x.clone());
    if let Some(r) = roots {
        req = req.with_roots(parse_scalars(r)?);
    }
    let v = a.eigenvector(&req)?;
    let residual = a.eigen_residual(n, &x, &v)?;
    let norm = |u: &[S]| u.iter().max_by(|p, q| p.abs_f64().total_cmp(&q.abs_f64())).cloned().unwrap_or_else(S::zero);
    let zero_vector = v.iter().all(Scalar::is_zero);

    let mut out = json!({
        "n": n,
        "x": x.render(),
        "backend": backend,
        "v": render_all(&v),
        "residual_norm": abs_text(&norm(&residual)),
        "v_norm": abs_text(&norm(&v)),
        "zero_vector": zero_vector,
    });
    if let Some(roots) = a.shifted_symbol(&req).ok().and_then(|s| s.roots().cloned()) {
        out["roots"] = json!({
            "distinct": roots.groups().map(|(z, _)| z.render()).collect::<Vec<_>>(),
            "multiplicities": roots.multiplicities(),
            "confluent": !roots.is_simple(),
        });
    }
    match a.geometric_form(&req) {
        Ok(g) => {
            out["geometric"] = json!({"C": render_all(&g.coefficients), "confluent": g.confluent});
        }
        Err(e) => out["geometric_unavailable"] = json!(e.to_string()),
    }
    if zero_vector {
        eprintln!(
            "warning: the constructed vector vanishes; a nonzero eigenvector needs the null-space \
             generalization, which this tool does not implement"
        );
        out["warning"] = json!("zero vector");
    }
    emit(out);
    Ok(())
}

pub fn schur(shape: &str, inner: Option<&str>, roots: Option<&str>, eseq: Option<&str>, backend: &str) -> CliResult<()> {
    let sp = parse_shape(shape, inner)?;
    let list = roots.or(eseq).expect("clap requires one of them");
    let resolved = parse_backend(backend)?.resolve(split_list(list));
    let shape_text = sp.to_string();
    let emit_value = |value: String, backend: &str| {
        emit(json!({"shape": shape_text, "value": value, "backend": backend}));
    };
    match resolved {
        Backend::Float => emit_value(schur_on::<ScaledComplex>(&sp, roots, eseq)?.render(), "float"),
        _ => emit_value(schur_on::<Rational>(&sp, roots, eseq)?.render(), "exact"),
    }
    Ok(())
}

fn schur_on<S: FromLiteral>(sp: &SkewPartition, roots: Option<&str>, eseq: Option<&str>) -> CliResult<S> {
    let h = match (roots, eseq) {
        (Some(r), _) => HomSeq::from_roots(&RootList::new(parse_scalars(r)?)),
        (None, Some(e)) => HomSeq::from_elem(ElemSeq::finite(parse_scalars(e)?)?),
        (None, None) => unreachable!("clap requires one of them"),
    };
    Ok(skew_schur(sp, &h)?)
}

pub fn expand(shape: &str, r: Option<usize>) -> CliResult<()> {
    let sp = parse_shape(shape, None)?;
    let r = match (sp.inner.len(), r) {
        (0, Some(r)) => r,
        (1, None) => sp.inner.part(0),
        (0, None) => return Err(CliError::Input("give r with -r or as λ/(r)".into())),
        _ => return Err(CliError::Input("the inner shape must be a single row (r)".into())),
    };
    let terms: Vec<String> = skew_pieri(&sp.outer, r).iter().map(ToString::to_string).collect();
    emit(json!({"shape": format!("{}/({r})", sp.outer), "r": r, "terms": terms}));
    Ok(())
}

/// `p` zeros outside the unit circle and `w - p` inside, so the symbol has
/// winding number zero.
fn bench_symbol(p: usize, w: usize, seed: u64) -> CliResult<LaurentSpec<ScaledComplex>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let z = (0..w)
        .map(|j| {
            let radius = if j < p { rng.gen_range(1.5..3.0) } else { rng.gen_range(0.2..0.7) };
            let angle = rng.gen_range(0.0..std::f64::consts::TAU);
            ScaledComplex::new(radius * angle.cos(), radius * angle.sin())
        })
        .collect();
    Ok(LaurentSpec::from_roots(p, ScaledComplex::from_f64(1.0), z)?)
}

pub fn bench(n_list: &str, p: usize, w: usize, seed: u64, cutoff: usize) -> CliResult<()> {
    if p > w {
        return Err(CliError::Input(format!("need p <= w, got p = {p}, w = {w}")));
    }
    let ns = parse_indices(n_list)?;
    let a = bench_symbol(p, w, seed)?;
    let mut rows = Vec::new();
    for n in ns {
        let start = Instant::now();
        let closed = a.determinant(n, DetMethod::BaxterSchmidt)?;
        let closed_secs = start.elapsed().as_secs_f64();
        let mut row = json!({
            "n": n,
            "closed_form": {"value": closed.render(), "seconds": closed_secs},
        });
        if n <= cutoff {
            let start = Instant::now();
            let banded = a.determinant(n, DetMethod::Banded)?;
            row["elimination"] = json!({"value": banded.render(), "seconds": start.elapsed().as_secs_f64()});
            row["relative_deviation"] = json!(relative_deviation(&closed, &banded));
        } else {
            row["elimination"] = json!("skipped");
            row["relative_deviation"] = Value::Null;
        }
        rows.push(row);
    }
    emit(json!({
        "p": p,
        "w": w,
        "seed": seed,
        "roots": render_all(a.roots().expect("built from roots").roots()),
        "cutoff": cutoff,
        "rows": rows,
    }));
    Ok(())
}
