//! One function per subcommand, each building a [`Document`].

use hms_core::mf::{connected_sum_claims, mf_hom_table, mf_make, mf_shift, per_factor_table, verify_periodicity};
use hms_core::orbifold::sector_decomposition;
use hms_core::orbit::{euler_pairing, orbit_hom_table};
use hms_core::qmodular::{double_sum, gen_function, jm_closed, log_dilog, quasimodular_check, RootSign};
use hms_core::stability::{Kind, StabilityLab};
use hms_core::DegreeTable;

use crate::config::{ChiNormalization, RunConfig};
use crate::document::{Document, Status, Table};
use crate::{CliError, ObjectSpec};

fn degree_rows(t: &mut Table, prefix: &[String], table: &DegreeTable) {
    for (d, m) in table.iter() {
        t.row(prefix.iter().cloned().chain([d.to_string(), m.to_string()]));
    }
}

pub fn mf(cfg: &RunConfig, periodicity: bool) -> Result<Document, CliError> {
    let n = cfg.n;
    let mut doc = Document::new("mf");
    doc.param("n", n);
    let t = per_factor_table(n)?;
    let support: Vec<String> = t.support().iter().map(|(delta, d, m)| format!("({delta},{d}):{m}")).collect();
    doc.summary("support", support.join(" "));
    doc.summary("wrap_shift", t.wrap_shift);
    let mut table = Table::new("translate", &["delta", "degree", "dim"]);
    for delta in -n + 1..=n {
        degree_rows(&mut table, &[delta.to_string()], &t.get(delta));
    }
    doc.tables.push(table);
    if periodicity {
        let report = verify_periodicity(n)?;
        doc.summary("periodicity_objects", report.objects_checked);
        doc.summary("periodicity", if report.passed() { "pass" } else { "fail" });
        if !report.passed() {
            doc.status = Status::Failed;
        }
    }
    if cfg.verbose {
        let mut claims = Table::new("translate_conventions", &["convention", "claim", "holds"]);
        for c in connected_sum_claims(n)? {
            claims.row([format!("{:?}", c.convention), c.claim, c.holds.to_string()]);
        }
        doc.tables.push(claims);
    }
    Ok(doc)
}

pub fn homtable(cfg: &RunConfig, source: ObjectSpec, target: ObjectSpec) -> Result<Document, CliError> {
    let build = |o: ObjectSpec| -> Result<_, CliError> { Ok(mf_shift(mf_make(cfg.n, o.a, o.s)?, o.shift)) };
    let (m, n) = (build(source)?, build(target)?);
    let mut doc = Document::new("homtable");
    doc.param("n", cfg.n);
    doc.param("source", source);
    doc.param("target", target);
    let table = mf_hom_table(&m, &n)?;
    doc.summary("hom", &table);
    doc.summary("euler", table.euler());
    let mut t = Table::new("hom", &["degree", "dim"]);
    degree_rows(&mut t, &[], &table);
    doc.tables.push(t);
    Ok(doc)
}

pub fn orbit(cfg: &RunConfig) -> Result<Document, CliError> {
    let table = orbit_hom_table(cfg.n)?;
    let mut doc = Document::new("orbit");
    doc.param("n", cfg.n);
    doc.summary("end", table.offset(0));
    let mut t = Table::new("orbit_hom", &["offset", "degree", "dim"]);
    for delta in 0..cfg.n {
        degree_rows(&mut t, &[delta.to_string()], table.offset(delta));
    }
    doc.tables.push(t);
    Ok(doc)
}

pub fn euler(cfg: &RunConfig) -> Result<Document, CliError> {
    let table = orbit_hom_table(cfg.n)?;
    let mut doc = Document::new("euler");
    doc.param("n", cfg.n);
    doc.param("chi", format!("{:?}", cfg.chi).to_lowercase());
    let row: Vec<i64> = (0..cfg.n)
        .map(|delta| {
            let p = euler_pairing(&table, 0, delta);
            match cfg.chi {
                ChiNormalization::Raw => p.raw,
                ChiNormalization::Normalized => p.normalized,
            }
        })
        .collect();
    doc.summary("row", row.iter().map(i64::to_string).collect::<Vec<_>>().join(","));
    let mut t = Table::new("euler", &["delta", "chi"]);
    for (delta, chi) in row.iter().enumerate() {
        t.row([delta as i64, *chi]);
    }
    doc.tables.push(t);
    Ok(doc)
}

pub struct StabilityArgs {
    pub kind: Kind,
    pub first: i64,
    pub last: i64,
    pub mutate: Option<usize>,
    pub monodromy: u32,
}

pub fn stability(cfg: &RunConfig, args: &StabilityArgs) -> Result<Document, CliError> {
    let lab = StabilityLab::new(cfg.n)?;
    let mut doc = Document::new("stability");
    doc.param("n", cfg.n);
    doc.param("kind", format!("{:?}", args.kind));
    doc.param("first", args.first);
    doc.param("last", args.last);
    let mut c = match args.kind {
        Kind::Gepner => lab.gepner_collection(args.first, args.last)?,
        Kind::LargeRadius => lab.large_radius_collection(args.first, args.last)?,
    };
    for _ in 0..args.monodromy {
        c = lab.monodromy(&c, args.kind)?;
    }
    if let Some(i) = args.mutate {
        doc.param("mutate", i);
        c = lab.mutate(&c, i)?;
    }
    doc.summary("ordered", lab.is_ordered(&c));
    let cluster = lab.is_cluster_collection(&c.entries)?;
    doc.summary("cluster", cluster.holds);
    if let Some(w) = cluster.witness {
        doc.summary("cluster_witness", w);
    }
    let mut objects = Table::new("objects", &["position", "object", "shift", "phase"]);
    for (i, e) in c.entries.iter().enumerate() {
        objects.row([i.to_string(), e.to_string(), e.shift.to_string(), e.phase.to_string()]);
    }
    doc.tables.push(objects);
    let quiver = lab.heart_quiver(&c, 0, c.entries.len().min(3))?;
    let mut arrows = Table::new("quiver", &["source", "target", "degree", "count"]);
    for (&(s, t, d), &m) in &quiver.arrows {
        arrows.row([s as i64, t as i64, d, m as i64]);
    }
    doc.tables.push(arrows);
    Ok(doc)
}

pub fn qseries_dilog(cfg: &RunConfig) -> Result<Document, CliError> {
    let log = log_dilog(cfg.x_trunc, cfg.w_trunc, RootSign::Minus)?;
    let mut doc = Document::new("qseries dilog");
    doc.param("xN", cfg.x_trunc);
    doc.param("wN", cfg.w_trunc);
    let mut t = Table::new("jm", &["m", "w_exponent", "extracted", "closed"]);
    let mut agree = true;
    for m in 1..=cfg.x_trunc {
        let extracted = log.x_coeff(m).expect("slot exists");
        let closed = jm_closed(m, cfg.w_trunc);
        agree &= extracted == &closed;
        for e in 0..=cfg.w_trunc {
            let (a, b) = (extracted.coeff(e).unwrap_or_default(), closed.coeff(e).unwrap_or_default());
            if a != b || a != Default::default() {
                t.row([m.to_string(), e.to_string(), a.to_string(), b.to_string()]);
            }
        }
    }
    doc.summary("extracted_equals_closed", agree);
    if !agree {
        doc.status = Status::Failed;
    }
    doc.tables.push(t);
    Ok(doc)
}

pub fn qseries_gen(cfg: &RunConfig, k: i64) -> Result<Document, CliError> {
    let lhs = gen_function(k, cfg.w_trunc)?;
    let rhs = double_sum(k, cfg.w_trunc)?;
    let mut doc = Document::new("qseries gen");
    doc.param("k", k);
    doc.param("wN", cfg.w_trunc);
    let holds = lhs == rhs;
    doc.summary("identity", holds);
    if !holds {
        doc.status = Status::Failed;
    }
    let mut t = Table::new("coefficients", &["w_exponent", "gen", "double_sum"]);
    for e in 1..=cfg.w_trunc {
        let (a, b) = (lhs.coeff(e).unwrap_or_default(), rhs.coeff(e).unwrap_or_default());
        t.row([e.to_string(), a.to_string(), b.to_string()]);
    }
    doc.tables.push(t);
    Ok(doc)
}

pub fn qseries_quasimodular(cfg: &RunConfig) -> Result<Document, CliError> {
    let report = quasimodular_check(cfg.w_trunc)?;
    let mut doc = Document::new("qseries quasimodular");
    doc.param("wN", cfg.w_trunc);
    doc.summary("residual", &report.residual);
    doc.summary("control_breaks_at", report.control_breaks_at().map_or("none".to_string(), |e| format!("w^{e}")));
    if !report.holds() {
        doc.status = Status::Failed;
    }
    let mut t = Table::new("control", &["w_exponent", "coefficient"]);
    for (e, c) in report.control.iter() {
        t.row([e.to_string(), c.to_string()]);
    }
    doc.tables.push(t);
    Ok(doc)
}

pub fn poincare(cfg: &RunConfig) -> Result<Document, CliError> {
    let n = usize::try_from(cfg.n).map_err(|_| CliError::Config("n out of range".into()))?;
    let sectors = sector_decomposition(n)?;
    let mut doc = Document::new("poincare");
    doc.param("n", n);
    doc.summary("poincare", sectors.poincare());
    doc.summary("classes", sectors.total_classes());
    let mut t = Table::new("sectors", &["blocks", "classes", "contribution"]);
    for s in &sectors.sectors {
        let blocks: Vec<String> = s.blocks.iter().map(usize::to_string).collect();
        t.row([blocks.join("+"), s.class_count.to_string(), s.contribution.to_string()]);
    }
    doc.tables.push(t);
    Ok(doc)
}

pub fn verify_all(only: &[u8]) -> Result<Document, CliError> {
    let results = if only.is_empty() {
        hms_verify::run_all()
    } else {
        let mut ids = only.to_vec();
        ids.sort_unstable();
        ids.dedup();
        ids.iter().map(|&id| hms_verify::run_criterion(id).ok_or_else(|| CliError::Config(format!("no criterion {id}")))).collect::<Result<_, _>>()?
    };
    let mut doc = Document::new("verify-all");
    let ids: Vec<String> = results.iter().map(|r| r.id.to_string()).collect();
    doc.param("criteria", ids.join(","));
    let passed = results.iter().filter(|r| r.passed()).count();
    doc.summary("passed", format!("{passed}/{}", results.len()));
    if passed != results.len() {
        doc.status = Status::Failed;
    }
    let mut t = Table::new("checks", &["criterion", "title", "check", "status"]);
    for r in &results {
        for c in &r.checks {
            t.row([r.id.to_string(), r.title.to_string(), c.name.clone(), if c.passed { "PASS" } else { "FAIL" }.to_string()]);
        }
    }
    doc.tables.push(t);
    Ok(doc)
}
