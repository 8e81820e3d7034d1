use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use splitsolv::classify::{classify, sample_params};
use splitsolv::coframe::{splitting_coframe, SplittingParams};
use splitsolv::lie::{catalog, CatalogLabel, RealLieAlgebra};
use splitsolv::metrics::{exists_metric, metric_table, MetricKind, EXISTENCE_TABLE};
use splitsolv::nakamura::{
    build_complexes, deformed_jc_coefficients, harmonic_table, nakamura_tables, report_rows, verify_harmonic_table, NakamuraParams, HARMONIC_CORRECTIONS,
};
use splitsolv::{certificate, Error, Field, GaussianRational as G, Theory};

#[derive(Parser)]
#[command(name = "splitsolv", version, about = "Splitting-type complex structures on six-dimensional solvmanifolds")]
struct Cli {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Also write the JSON result(s) into this directory
    #[arg(long, global = true)]
    fixtures: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Jacobi identity, unimodularity and Betti numbers of a real Lie algebra
    Algebra {
        /// Structure equations, e.g. "(0, -e^{13}, e^{12}, 0)"
        #[arg(long, conflicts_with = "label", allow_hyphen_values = true)]
        parse: Option<String>,
        /// Catalog label, e.g. "s7^{1/2}"
        #[arg(long)]
        label: Option<String>,
        /// Exit 1 unless the equations define a Lie algebra
        #[arg(long)]
        check: bool,
    },
    /// Identify the Lie algebra underlying a splitting-type structure
    Classify(Structure),
    /// Existence of special Hermitian metrics
    Metrics {
        #[command(flatten)]
        structure: Structure,
        /// Metric kind (default: every column of the existence table)
        #[arg(long)]
        kind: Vec<String>,
        /// Exit 1 if some requested kind admits no metric
        #[arg(long)]
        exists: bool,
    },
    /// Cohomology of the Nakamura complexes for J_C deformed by t
    Cohomology {
        #[arg(long = "C", allow_hyphen_values = true)]
        c: String,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        t: String,
        /// dolbeault, bott_chern, aeppli, de_rham or all
        #[arg(long, default_value = "all")]
        theory: String,
    },
    /// ∂∂̄-lemma and deformations of the Nakamura structures
    Nakamura {
        #[arg(long, requires = "c", conflicts_with = "deform")]
        ddbar: bool,
        #[arg(long = "C", allow_hyphen_values = true)]
        c: Option<String>,
        #[arg(long, requires = "k")]
        deform: bool,
        /// C_k = i/(2k+1)
        #[arg(long, allow_hyphen_values = true)]
        k: Option<i64>,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        t: String,
    },
    /// Certificate that G5 admits a lattice for the given (s, n)
    Lattice {
        #[arg(long, allow_hyphen_values = true)]
        s: i64,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
    },
    /// Regenerate the tables
    Tables {
        #[arg(long)]
        all: bool,
        #[arg(long)]
        classification: bool,
        #[arg(long)]
        metrics: bool,
        #[arg(long)]
        dolbeault: bool,
        #[arg(long)]
        deformation: bool,
        #[arg(long)]
        harmonic: bool,
    },
}

#[derive(Args)]
struct Structure {
    #[arg(long = "A", default_value = "0", allow_hyphen_values = true)]
    a: String,
    #[arg(long = "B", default_value = "0", allow_hyphen_values = true)]
    b: String,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(0..=1))]
    eps: u8,
    /// The KT family instead of C2
    #[arg(long)]
    kt: bool,
}

impl Structure {
    fn params(&self) -> Result<SplittingParams, Failure> {
        if self.kt {
            return Ok(SplittingParams::kt(self.eps));
        }
        Ok(SplittingParams::c2(scalar(&self.a)?, scalar(&self.b)?, self.eps))
    }
}

enum Failure {
    Usage(String),
    Infeasible(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } | Error::OutOfRange(_) | Error::Dimension(_) => Failure::Usage(e.to_string()),
            Error::Degenerate(_) | Error::NonIntegrable | Error::NotComplexStructure | Error::Singular => Failure::Infeasible(e.to_string()),
            Error::Internal(_) => Failure::Internal(e.to_string()),
        }
    }
}

struct Output {
    /// (file stem, json) pairs; one per table section
    parts: Vec<(String, Value)>,
    text: String,
    infeasible: bool,
}

impl Output {
    fn one(name: &str, json: Value, text: String) -> Self {
        Output { parts: vec![(name.to_string(), json)], text, infeasible: false }
    }
}

fn scalar(s: &str) -> Result<G, Failure> {
    G::parse(s).map_err(|e| Failure::Usage(format!("'{s}': {e}")))
}

fn algebra(parse: Option<String>, label: Option<String>, check: bool) -> Result<Output, Failure> {
    let (alg, source): (RealLieAlgebra, String) = match (parse, label) {
        (Some(text), _) => (RealLieAlgebra::parse(&text)?, "input equations".into()),
        (None, Some(l)) => {
            let l = CatalogLabel::parse(&l)?;
            (catalog(&l)?, format!("catalog of six-dimensional solvable algebras, {l}"))
        }
        (None, None) => return Err(Failure::Usage("pass --parse or --label".into())),
    };
    let jacobi = alg.jacobi_check();
    let unimodular = alg.unimodular_check();
    let betti = if jacobi { Some(alg.ce_cohomology()) } else { None };
    let json = json!({
        "equations": alg.to_string(),
        "jacobi": jacobi,
        "unimodular": unimodular,
        "betti": betti,
        "source": source,
    });
    let mut text = format!("{alg}\njacobi      {jacobi}\nunimodular  {unimodular}\n");
    if let Some(b) = &betti {
        text.push_str(&format!("betti       {}\n", b.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")));
    }
    text.push_str(&format!("source      {source}\n"));
    let mut out = Output::one("algebra", json, text);
    out.infeasible = check && !jacobi;
    Ok(out)
}

fn classify_cmd(s: &Structure) -> Result<Output, Failure> {
    let p = s.params()?;
    let r = classify(&p)?;
    let source = format!("classification table {}", r.row);
    let json = json!({ "input": p.to_string(), "result": r, "source": source });
    let mut text = format!("{p}\nlabel   {}\nraw     {}\nrow     {}\n", r.label, r.raw_label, r.row);
    for st in &r.reductions {
        let ch = st.change.map_or("relabel".to_string(), |c| c.to_string());
        let lambda = st.lambda.as_ref().map_or(String::new(), |l| format!(" (lambda={l})"));
        text.push_str(&format!("reduce  {} -> {} by {ch}{lambda}\n", st.from, st.to));
    }
    text.push_str(&format!("change  e = M alpha, M =\n{:?}\nsource  {source}\n", r.basis_change.matrix));
    Ok(Output::one("classify", json, text))
}

fn metrics_cmd(s: &Structure, kinds: &[String], exists: bool) -> Result<Output, Failure> {
    let p = s.params()?;
    let cf = splitting_coframe(&p);
    let kinds: Vec<MetricKind> =
        if kinds.is_empty() { MetricKind::TABLE.to_vec() } else { kinds.iter().map(|k| MetricKind::parse(k)).collect::<Result<_, _>>()? };
    let label = classify(&p)?.label;
    let mut certs = Vec::new();
    let mut text = format!("{p}  ({label})\n");
    for k in &kinds {
        let c = exists_metric(*k, &cf)?;
        let detail = match (&c.witness, &c.obstruction) {
            (Some(w), _) => format!("witness {w}"),
            (_, Some(o)) => o.clone(),
            _ => String::new(),
        };
        text.push_str(&format!("{:<14} {:<3} {detail}\n", k.header(), if c.feasible { "yes" } else { "no" }));
        certs.push(c);
    }
    let source = format!("existence of Hermitian metrics, row {label}");
    text.push_str(&format!("source  {source}\n"));
    let infeasible = exists && certs.iter().any(|c| !c.feasible);
    let json = json!({ "input": p.to_string(), "label": label, "certificates": certs, "source": source });
    let mut out = Output::one("metrics", json, text);
    out.infeasible = infeasible;
    Ok(out)
}

fn theories(s: &str) -> Result<Vec<Theory>, Failure> {
    if s == "all" {
        return Ok(Theory::ALL.to_vec());
    }
    s.split(',').map(|x| Theory::parse(x).map_err(Failure::from)).collect()
}

fn cohomology_cmd(c: &str, t: &str, theory: &str) -> Result<Output, Failure> {
    let params = NakamuraParams::new(scalar(c)?, scalar(t)?)?;
    let nc = build_complexes(&params)?;
    let ths = theories(theory)?;
    let rows = report_rows(&nc, &ths);
    let source = "Nakamura double complexes B (Dolbeault) and C (Bott-Chern, Aeppli, de Rham)";
    let mut text = format!("C={} t={}\n", params.c, params.t);
    for th in &ths {
        text.push_str(&nc.cohomology(*th).render());
    }
    text.push_str(&format!("source  {source}\n"));
    if !Field::is_zero(&params.t) {
        text.push_str("note    the deformation results are stated for small |t|\n");
    }
    Ok(Output::one("cohomology", json!({ "rows": rows, "source": source }), text))
}

fn ddbar_cmd(c: &str) -> Result<Output, Failure> {
    let c = scalar(c)?;
    let nc = build_complexes(&NakamuraParams::new(c.clone(), G::zero())?)?;
    let w = nc.c.ddbar_witness();
    let ok = w.is_none();
    let source = "ddbar-lemma for X_C: holds iff C != i/k";
    let mut text = format!("C={c}\nddbar   {ok}\n");
    if let Some(w) = &w {
        text.push_str(&format!("witness ({},{}) {:?}-exact, not ddbar-exact: {}\n", w.p, w.q, w.exactness, w.form));
    }
    text.push_str(&format!("source  {source}\n"));
    Ok(Output::one("nakamura", json!({ "C": c, "ddbar": ok, "witness": w, "source": source }), text))
}

fn deform_cmd(k: i64, t: &str) -> Result<Output, Failure> {
    let c = G::new(splitsolv::Rational::from_integer(0.into()), splitsolv::Rational::new(1.into(), (2 * k + 1).into()));
    let t = scalar(t)?;
    let nc = build_complexes(&NakamuraParams::new(c.clone(), t.clone())?)?;
    let rows = report_rows(&nc, &[Theory::DeRham, Theory::Dolbeault, Theory::BottChern]);
    let ddbar = nc.c.ddbar_lemma();
    let (x, y) = deformed_jc_coefficients(&c, &t);
    let source = "deformations (X_k)_t of the Nakamura manifolds, C_k = i/(2k+1)";
    let mut text = format!("k={k} C={c} t={t}\nd w1 = ({x}) w13 + ({y}) w1~3\nddbar   {ddbar}\n");
    let dims = |th: Theory, p: usize, q: usize| nc.cohomology(th).get(p, q);
    text.push_str("(p,q)   dbar  BC\n");
    for s in 0..=6usize {
        for p in (0..=3usize).rev() {
            if s >= p && s - p <= 3 {
                let q = s - p;
                text.push_str(&format!("({p},{q})   {:<5} {}\n", dims(Theory::Dolbeault, p, q), dims(Theory::BottChern, p, q)));
            }
        }
    }
    let dr = nc.cohomology(Theory::DeRham);
    text.push_str(&format!("betti   {}\n", (0..=6).map(|k| dr.betti(k).to_string()).collect::<Vec<_>>().join(" ")));
    text.push_str(&format!("source  {source}\n"));
    if !Field::is_zero(&t) {
        text.push_str("note    the deformation results are stated for small |t|\n");
    }
    let json = json!({ "k": k, "C": c, "t": t, "dw1": [x, y], "ddbar": ddbar, "rows": rows, "source": source });
    Ok(Output::one("deform", json, text))
}

fn lattice_cmd(s: i64, n: i64) -> Result<Output, Failure> {
    let c = certificate(s, n)?;
    let source = "lattices of G5 via exp(tau ad e5) conjugate to B_s";
    let text = format!(
        "s={s} n={n} D={}\ntau     {}\nalpha   {}\nM =\n{:?}\nB_s =\n{:?}\nQ =\n{:?}\ncharpoly (low to high) {}\ndet B_s {}\nsource  {source}\n",
        c.d,
        c.tau,
        c.alpha,
        c.m,
        c.bs,
        c.q,
        c.charpoly.join(" "),
        c.det_bs
    );
    Ok(Output::one("lattice", json!({ "certificate": c, "source": source }), text))
}

fn classification_tables() -> Result<(Value, String), Failure> {
    let mut groups: BTreeMap<String, BTreeMap<String, Vec<String>>> = BTreeMap::new();
    for p in sample_params() {
        let r = classify(&p)?;
        let (group, row) = r.row.split_once(": ").unwrap_or((r.row.as_str(), ""));
        let labels = groups.entry(group.to_string()).or_default().entry(row.to_string()).or_default();
        let l = format!("s{}", r.label.index());
        if !labels.contains(&l) {
            labels.push(l);
        }
    }
    let mut text = String::from("== classification (label columns)\n");
    for (g, rows) in &groups {
        text.push_str(&format!("-- {g}\n"));
        for (row, labels) in rows {
            text.push_str(&format!("  {row:<58} {}\n", labels.join(", ")));
        }
    }
    Ok((json!({ "tables": groups, "source": "classification tables, sampled structures" }), text))
}

fn metric_tables() -> Result<(Value, String), Failure> {
    let mut per: BTreeMap<usize, Vec<SplittingParams>> = BTreeMap::new();
    for p in sample_params() {
        let v = per.entry(classify(&p)?.label.index()).or_default();
        if v.len() < 25 {
            v.push(p);
        }
    }
    let table = metric_table(&per.into_values().flatten().collect::<Vec<_>>())?;
    let mut text = String::from("== existence of Hermitian metrics\n");
    text.push_str(&format!("      {}\n", MetricKind::TABLE.iter().map(|k| format!("{:<14}", k.header())).collect::<String>()));
    let mut agree = true;
    for row in &table {
        let want = EXISTENCE_TABLE[row.algebra - 1];
        agree &= row.cells.iter().zip(want).all(|(c, w)| (*c == splitsolv::metrics::TableCell::All) == w);
        let cells: String = row.cells.iter().map(|c| format!("{:<14}", c.symbol())).collect();
        text.push_str(&format!("s{:<4} {cells} ({} structures)\n", row.algebra, row.structures));
    }
    text.push_str(&format!("matches table: {agree}\n"));
    Ok((json!({ "rows": table, "matches": agree, "source": "existence of Hermitian metrics for splitting-type structures" }), text))
}

fn nakamura_cs() -> Vec<G> {
    ["i", "i/3", "i/2", "i/4", "1+i", "2+3i", "2i/3"].iter().map(|s| G::parse(s).unwrap()).collect()
}

fn dolbeault_tables() -> Result<(Value, String), Failure> {
    let rep = nakamura_tables(&nakamura_cs(), &G::i(), &[])?;
    let mut text = String::from("== Dolbeault cohomology of X_C\n");
    text.push_str(&rep.render());
    Ok((json!({ "rows": rep.rows, "source": "Dolbeault table of B for C = i/(2k+1), i/(2k), other" }), text))
}

fn deformation_tables() -> Result<(Value, String), Failure> {
    let ts: Vec<G> = ["0", "1/2", "1/4", "1/4+i/4"].iter().map(|s| G::parse(s).unwrap()).collect();
    let rep = nakamura_tables(&[], &G::i(), &ts)?;
    let mut text = String::from("== de Rham, Dolbeault and Bott-Chern numbers of (X_k)_t, C_k = i\n");
    text.push_str(&rep.render());
    Ok((json!({ "rows": rep.rows, "source": "summary of the cohomologies of (X_k)_t" }), text))
}

fn harmonic_tables() -> Result<(Value, String), Failure> {
    let mut checks = Vec::new();
    for (c, t) in [("i", "1/2"), ("i/3", "1/4"), ("-i", "1/4+i/4")] {
        checks.extend(verify_harmonic_table(&G::parse(c).unwrap(), &G::parse(t).unwrap())?);
    }
    let mut text = String::from("== harmonic representatives\n");
    let bad = checks.iter().filter(|c| !c.verified).count();
    text.push_str(&format!("{} rows x 3 structures checked, {} fail\n", harmonic_table().len(), bad));
    for c in checks.iter().filter(|c| !c.verified) {
        text.push_str(&format!("  FAIL C={} t={} {} ({},{})\n", c.c, c.t, c.row.theory, c.row.p, c.row.q));
    }
    let corrections: Vec<Value> = HARMONIC_CORRECTIONS
        .iter()
        .map(|(th, def, p, q, printed, used)| json!({ "theory": th, "deformed": def, "bidegree": [p, q], "printed": printed, "used": used }))
        .collect();
    for (th, _, p, q, printed, used) in HARMONIC_CORRECTIONS {
        text.push_str(&format!("  corrected {} ({p},{q}): printed [{printed}], used [{used}]\n", th.name()));
    }
    Ok((json!({ "checks": checks, "corrections": corrections, "source": "harmonic representatives of the Dolbeault and Bott-Chern cohomologies" }), text))
}

fn tables_cmd(flags: [bool; 5], all: bool) -> Result<Output, Failure> {
    type Section = fn() -> Result<(Value, String), Failure>;
    let sections: [(&str, Section); 5] = [
        ("classification", classification_tables),
        ("metrics", metric_tables),
        ("dolbeault", dolbeault_tables),
        ("deformation", deformation_tables),
        ("harmonic", harmonic_tables),
    ];
    if !all && !flags.iter().any(|f| *f) {
        return Err(Failure::Usage("choose --all or at least one table".into()));
    }
    let mut out = Output { parts: Vec::new(), text: String::new(), infeasible: false };
    for ((name, f), on) in sections.iter().zip(flags) {
        if all || on {
            let (json, text) = f()?;
            out.parts.push((name.to_string(), json));
            out.text.push_str(&text);
        }
    }
    Ok(out)
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    match &cli.cmd {
        Cmd::Algebra { parse, label, check } => algebra(parse.clone(), label.clone(), *check),
        Cmd::Classify(s) => classify_cmd(s),
        Cmd::Metrics { structure, kind, exists } => metrics_cmd(structure, kind, *exists),
        Cmd::Cohomology { c, t, theory } => cohomology_cmd(c, t, theory),
        Cmd::Nakamura { ddbar, c, deform, k, t } => match (ddbar, deform, c, k) {
            (true, _, Some(c), _) => ddbar_cmd(c),
            (_, true, _, Some(k)) => deform_cmd(*k, t),
            _ => Err(Failure::Usage("use --ddbar --C=... or --deform --k=... --t=...".into())),
        },
        Cmd::Lattice { s, n } => lattice_cmd(*s, *n),
        Cmd::Tables { all, classification, metrics, dolbeault, deformation, harmonic } => {
            tables_cmd([*classification, *metrics, *dolbeault, *deformation, *harmonic], *all)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match run(&cli) {
        Ok(o) => o,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            return ExitCode::from(2);
        }
        Err(Failure::Infeasible(m)) => {
            eprintln!("infeasible: {m}");
            return ExitCode::from(1);
        }
        Err(Failure::Internal(m)) => {
            eprintln!("internal error: {m}");
            return ExitCode::from(1);
        }
    };
    let json = if out.parts.len() == 1 { out.parts[0].1.clone() } else { Value::Object(out.parts.iter().cloned().collect()) };
    match cli.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&json).expect("serializable")),
        Format::Text => print!("{}", out.text),
    }
    if let Some(dir) = &cli.fixtures {
        if let Err(e) = fs::create_dir_all(dir) {
            eprintln!("error: {}: {e}", dir.display());
            return ExitCode::from(2);
        }
        for (name, v) in &out.parts {
            let path = dir.join(format!("{name}.json"));
            if let Err(e) = fs::write(&path, serde_json::to_string_pretty(v).expect("serializable") + "\n") {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
    }
    if out.infeasible {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
