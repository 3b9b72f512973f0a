use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use cliffork::classification::{
    division_ring, group_center_type, idempotent_factor_count, periodic_table, primitive_idempotent,
    representation_label, salingaros_family, salingaros_type, TableKind,
};
use cliffork::coverings::{cpt_structure, odd_dimensional_decomposition_report, pt_structure};
use cliffork::ext::{classify_ext_group, ext_group_matrices, render_table, signature_vector, unit_word, NAMES};
use cliffork::quotient::{quotient_class, quotient_group, transfer_report, EpsilonContext};
use cliffork::spinor::{build_spinbasis, gamma_basis, load_spinbasis_json, SpinBasis};
use cliffork::verify::{run_suite, suite_id, summary_line, SUITES};
use cliffork::{Error, SignatureSpec};

#[derive(Parser)]
#[command(name = "cliffork", version, about = "Exact Clifford algebra workbench")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    #[arg(long, value_enum, default_value_t = Format::Markdown, global = true)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Markdown,
    Json,
}

#[derive(Args, Clone)]
struct SigArgs {
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
    /// complex algebra C_N
    #[arg(long)]
    complex: Option<usize>,
    /// marked real subalgebra of the complex algebra, as P,Q
    #[arg(long)]
    mark: Option<String>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Division ring, type, Salingaros family and representation label
    Classify(SigArgs),
    /// Regenerate a periodic table
    Table {
        #[arg(long, default_value = "rings")]
        kind: String,
        #[arg(long, default_value_t = 7)]
        max: usize,
    },
    /// Extended automorphism group {I,W,E,C,Π,K,S,F} of a spinbasis
    ExtGroup {
        #[command(flatten)]
        sig: SigArgs,
        /// `gamma` or a JSON basis file
        #[arg(long)]
        basis: Option<String>,
    },
    /// Pin^{a,b,c} and Pin^{a,b,c,d,e,f,g} coverings
    Cover(SigArgs),
    /// Quotient algebra of an odd-dimensional algebra
    Quotient(SigArgs),
    /// Run verification suites
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

enum Failure {
    Usage(String),
    Falsified(Value),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Falsified(_) | Error::Condition { .. } => Failure::Falsified(json!({ "error": e.to_string() })),
            other => Failure::Usage(other.to_string()),
        }
    }
}

type Out = Result<String, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

impl SigArgs {
    fn resolve(&self) -> Result<SignatureSpec, Failure> {
        match (self.p, self.q, self.complex) {
            (Some(p), Some(q), None) => Ok(SignatureSpec::real(p, q)),
            (None, None, Some(n)) => match &self.mark {
                None => Ok(SignatureSpec::complex(n)),
                Some(m) => {
                    let parts: Vec<usize> = m
                        .split(',')
                        .map(|s| s.trim().parse().map_err(|_| usage(format!("bad --mark '{}'", m))))
                        .collect::<Result<_, _>>()?;
                    match parts[..] {
                        [p, q] if p + q == n => Ok(SignatureSpec::complex_marked(p, q)),
                        _ => Err(usage(format!("--mark must be P,Q with P+Q = {}", n))),
                    }
                }
            },
            _ => Err(usage("give --p and --q, or --complex N [--mark P,Q]")),
        }
    }
}

fn emit(fmt: Format, v: Value, md: String) -> String {
    match fmt {
        Format::Json => serde_json::to_string_pretty(&v).expect("json"),
        Format::Markdown => md,
    }
}

fn classify(fmt: Format, sig: SignatureSpec) -> Out {
    let real = SignatureSpec::real(sig.p, sig.q);
    let cls = division_ring(&real);
    let sal = salingaros_type(&real);
    let idem = primitive_idempotent(&real).ok().map(|f| f.f.to_string());
    let v = json!({
        "algebra": sig.to_string(),
        "mod8": cls.mod8,
        "ring": cls.ring.to_string(),
        "label": cls.label(),
        "simple": cls.simple,
        "salingaros": sal.to_string(),
        "salingaros_family": format!("{:?}", salingaros_family(&real)),
        "group_center": group_center_type(&real).to_string(),
        "idempotent_factors": idempotent_factor_count(&real),
        "primitive_idempotent": idem,
        "representation": representation_label(&real, false),
    });
    let mut md = format!("## {}\n\n| field | value |\n|---|---|\n", sig);
    for (k, val) in v.as_object().expect("object") {
        let s = match val {
            Value::String(s) => s.clone(),
            Value::Null => "-".into(),
            other => other.to_string(),
        };
        let _ = writeln!(md, "| {} | {} |", k, s);
    }
    Ok(emit(fmt, v, md))
}

fn table(fmt: Format, kind: &str, max: usize) -> Out {
    let kind: TableKind = kind.parse().map_err(|e: Error| usage(e.to_string()))?;
    let t = periodic_table(max, max, kind);
    Ok(emit(fmt, t.to_json(), t.to_markdown()))
}

fn load_basis(sig: Option<SignatureSpec>, basis: Option<&str>) -> Result<SpinBasis, Failure> {
    match (basis, sig) {
        (Some("gamma"), _) => Ok(gamma_basis()),
        (Some(path), _) => {
            let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {}", path, e)))?;
            Ok(load_spinbasis_json(&text)?)
        }
        (None, Some(s)) => Ok(build_spinbasis(&s)?),
        (None, None) => Err(usage("give --p/--q or --basis")),
    }
}

fn ext_group(fmt: Format, sig: &SigArgs, basis: Option<&str>) -> Out {
    let s = if sig.p.is_some() || sig.complex.is_some() { Some(sig.resolve()?) } else { None };
    let b = load_basis(s, basis)?;
    if let Some(s) = s {
        if (s.p, s.q) != (b.sig.p, b.sig.q) {
            return Err(usage(format!("basis is for {}, not {}", b.sig, s)));
        }
    }
    let ext = ext_group_matrices(&b)?;
    let sv = signature_vector(&ext)?;
    let cls = classify_ext_group(&ext)?;
    let units: Vec<Value> =
        (0..8).map(|j| json!({ "name": NAMES[j], "word": unit_word(&b, ext.masks[j], ext.signs[j]) })).collect();
    let v = json!({
        "schema": 1,
        "algebra": b.sig.to_string(),
        "provenance": b.provenance,
        "counts": b.counts,
        "forms": ext.forms.to_string(),
        "units": units,
        "signature": sv.to_string(),
        "class": cls.class.to_string(),
        "abelian": cls.abelian,
        "order_structure": cls.order_structure_string(),
        "abstract_group": cls.abstract_group,
        "table": cls.table,
    });
    let mut md = format!("## Ext({}) from {}\n\n", b.sig, b.provenance);
    for u in &units {
        let _ = writeln!(md, "- {} = {}", u["name"].as_str().unwrap_or(""), u["word"].as_str().unwrap_or(""));
    }
    let _ = writeln!(md, "\nforms: {}\n\nsignature: {}\n", ext.forms, sv);
    let _ = writeln!(
        md,
        "class: {} (abelian: {}, order structure {}, with −I: {})\n",
        cls.class,
        cls.abelian,
        cls.order_structure_string(),
        cls.abstract_group
    );
    md.push_str(&render_table(&NAMES, &cls.table));
    Ok(emit(fmt, v, md))
}

fn cover(fmt: Format, sig: SignatureSpec) -> Out {
    let pt = pt_structure(&sig)?;
    let cpt = cpt_structure(&sig).ok();
    let odd = odd_dimensional_decomposition_report(&sig).ok();
    let v = json!({ "schema": 1, "pt": pt, "cpt": cpt, "odd": odd });
    if pt.consistent == Some(false) {
        return Err(Failure::Falsified(v));
    }
    let mut md = format!("## Coverings of {}\n\n", pt.algebra);
    let _ = writeln!(md, "admissible (a,b,c): {} ({})", pt.admissible.join(" "), pt.note);
    let _ = writeln!(md, "\nfinite groups: {}", pt.cover_groups.join(" "));
    if let (Some(c), Some(g)) = (&pt.computed, &pt.computed_group) {
        let _ = writeln!(md, "\ncanonical spinbasis: {} → {}", c, g);
    }
    if let Some(c) = &cpt {
        let _ = writeln!(
            md,
            "\nPin^{{a,b,c,d,e,f,g}}: signature {} → {} (with −I: {}){}",
            c.signature,
            c.cover_group,
            c.abstract_group,
            if c.reduced { ", reduced" } else { "" }
        );
    }
    if let Some(o) = &odd {
        let _ = writeln!(md, "\nω² = {}", o.omega_square);
        for d in &o.decompositions {
            let _ = writeln!(md, "- {}", d);
        }
        if let Some(u) = &o.unitary {
            let _ = writeln!(md, "- {}", u);
        }
    }
    Ok(emit(fmt, v, md))
}

fn quotient(fmt: Format, sig: SignatureSpec) -> Out {
    let ctx = EpsilonContext::new(sig)?;
    let tr = transfer_report(&ctx)?;
    let cls = quotient_class(&ctx)?;
    let g = quotient_group(&ctx)?;
    let t7 = periodic_table(7, 7, TableKind::Quotient);
    let v = json!({
        "schema": 1,
        "algebra": sig.to_string(),
        "eps": ctx.eps_label(),
        "transfers": tr,
        "class": cls,
        "group": g,
        "table": t7.to_json(),
    });
    let mut md =
        format!("## Quotient of {} (ε = {})\n\n| symmetry | rule | εω fixed |\n|---|---|---|\n", sig, ctx.eps_label());
    for r in &tr.rows {
        let _ = writeln!(md, "| {} | {} | {} |", r.symbol, r.predicted, r.direct);
    }
    let _ = writeln!(md, "\nclass {}: {{{}}}", cls.label, cls.surviving.join(", "));
    let _ = writeln!(md, "\ncovering {} onto {}", g.label, g.targets.join(", "));
    match &g.cayley {
        Some(tab) => {
            let _ = writeln!(md, "\n| ∘ | {} |", g.elements.join(" | "));
            let _ = writeln!(md, "|---|{}", "---|".repeat(g.elements.len()));
            for (i, row) in tab.iter().enumerate() {
                let _ = writeln!(md, "| {} | {} |", g.elements[i], row.join(" | "));
            }
            if let Some(n) = &g.group_name {
                let _ = writeln!(md, "\ngroup: {}", n);
            }
        }
        None => {
            let _ = writeln!(md, "\n{{{}}} does not form a group", g.elements.join(","));
        }
    }
    md.push('\n');
    md.push_str(&t7.to_markdown());
    Ok(emit(fmt, v, md))
}

fn verify(fmt: Format, suite: &str) -> Out {
    let ids: Vec<usize> = if suite == "all" {
        (1..=SUITES.len()).collect()
    } else {
        vec![suite_id(suite).map_err(|e| usage(e.to_string()))?]
    };
    let mut reports = vec![];
    for id in ids {
        reports.push(run_suite(id)?);
    }
    let mut md = String::new();
    for r in &reports {
        let _ = writeln!(md, "{}", summary_line(r));
        for n in &r.notes {
            let _ = writeln!(md, "    note: {}", n);
        }
        for c in &r.counterexamples {
            let _ = writeln!(md, "    counterexample: {}", c);
        }
    }
    let v = serde_json::to_value(&reports).expect("json");
    if reports.iter().any(|r| !r.passed) {
        return Err(Failure::Falsified(match fmt {
            Format::Json => v,
            Format::Markdown => Value::String(md),
        }));
    }
    Ok(emit(fmt, v, md))
}

fn run(cli: Cli) -> Out {
    let fmt = cli.format;
    match &cli.cmd {
        Cmd::Classify(s) => classify(fmt, s.resolve()?),
        Cmd::Table { kind, max } => table(fmt, kind, *max),
        Cmd::ExtGroup { sig, basis } => ext_group(fmt, sig, basis.as_deref()),
        Cmd::Cover(s) => cover(fmt, s.resolve()?),
        Cmd::Quotient(s) => quotient(fmt, s.resolve()?),
        Cmd::Verify { suite } => verify(fmt, suite),
    }
}

fn print_out(s: &str) {
    use std::io::Write;
    let _ = writeln!(std::io::stdout().lock(), "{}", s);
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(s) => {
            print_out(s.trim_end());
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {}", m);
            ExitCode::from(2)
        }
        Err(Failure::Falsified(v)) => {
            match v {
                Value::String(s) => print_out(s.trim_end()),
                other => print_out(&serde_json::to_string_pretty(&other).expect("json")),
            }
            ExitCode::from(1)
        }
    }
}
