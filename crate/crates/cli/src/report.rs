//! Per-member results and the three summary tables.

use std::fmt::Write as _;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use anyhow::Result;
use qcontext::contextuality::{build_system, check_contextual, degree, negative_context_count};
use qcontext::geometry::{GeometryFamily, PolarSpace};
use qcontext::gf2::SearchBudget;
use qcontext::QuantumConfiguration;
use serde::Serialize;

/// Degree searches are skipped above this rank; `2^40` sweeps already take hours.
pub const DEGREE_RANK_LIMIT: usize = 40;

/// Lines-family degrees quoted in the literature but not computed here.
pub const KNOWN_LINE_DEGREES: [(usize, usize); 3] = [(3, 90), (4, 1908), (5, 35400)];

/// Rows of every family for one rank.
pub type RankRows = (usize, Vec<(GeometryFamily, Vec<ReportRow>)>);

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportRow {
    pub family: String,
    pub n: usize,
    pub index: usize,
    pub member: String,
    pub members: usize,
    pub points: usize,
    pub contexts: usize,
    pub contextual: bool,
    /// Empty when no degree search was attempted.
    pub degree: Option<usize>,
    pub degree_proven: bool,
    pub negative_contexts: usize,
    pub b: Option<i64>,
    pub epsilon: Option<f64>,
    pub wall_ms: u128,
}

/// Verdict and, when the rank allows it, the degree of one configuration.
pub fn report_row(
    family: GeometryFamily,
    index: usize,
    members: usize,
    config: &QuantumConfiguration,
    budget: &SearchBudget,
) -> Result<ReportRow> {
    let start = Instant::now();
    let sys = build_system(config)?;
    let verdict = check_contextual(&sys);
    let rank = qcontext::gf2::rank(&sys.a);
    let report = (!verdict.contextual || rank <= DEGREE_RANK_LIMIT).then(|| degree(&sys, budget));
    Ok(ReportRow {
        family: family.to_string(),
        n: config.n(),
        index,
        member: config.source().to_string(),
        members,
        points: config.num_points(),
        contexts: config.num_contexts(),
        contextual: verdict.contextual,
        degree: report.as_ref().map(|r| r.degree),
        degree_proven: report.as_ref().is_some_and(|r| r.proven),
        negative_contexts: negative_context_count(&sys),
        b: report.as_ref().map(|r| r.bound_b()),
        epsilon: report.as_ref().and_then(|r| r.epsilon()).map(|e| e.value()),
        wall_ms: start.elapsed().as_millis(),
    })
}

/// Rows for every member of a family. Members are spread over `threads`
/// workers, each running single-threaded searches; a lone member gets all
/// threads for its own search.
pub fn family_rows(
    space: &PolarSpace,
    family: GeometryFamily,
    per_member: Option<Duration>,
    threads: usize,
) -> Result<Vec<ReportRow>> {
    let geometries = space.enumerate_family(family);
    let members = geometries.len();
    let threads = threads.max(1);
    let mut budget = SearchBudget::unlimited().with_threads(if members == 1 { threads } else { 1 });
    budget.max_duration = per_member;
    let next = AtomicUsize::new(0);
    let results: Mutex<Vec<Option<Result<ReportRow>>>> = Mutex::new((0..members).map(|_| None).collect());
    std::thread::scope(|scope| {
        for _ in 0..threads.min(members.max(1)) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(g) = geometries.get(i) else { break };
                let config = QuantumConfiguration::from_geometry(space, g);
                let row = report_row(family, i, members, &config, &budget);
                results.lock().expect("no worker panics while holding the lock")[i] = Some(row);
            });
        }
    });
    results
        .into_inner()
        .expect("workers finished")
        .into_iter()
        .map(|r| r.expect("every member was processed"))
        .collect()
}

/// One degree-table cell summarising a family's rows.
pub fn degree_cell(n: usize, family: GeometryFamily, rows: &[ReportRow]) -> String {
    let m = rows.len();
    let count = |s: String| if m == 1 { s } else { format!("{s}({m})") };
    if rows.is_empty() {
        return "-".into();
    }
    if rows.iter().all(|r| r.contexts == 0) {
        return count("N/A".into());
    }
    if rows.iter().all(|r| !r.contextual) {
        return count("0".into());
    }
    if family == GeometryFamily::Lines {
        if let Some(&(_, known)) = KNOWN_LINE_DEGREES.iter().find(|(k, _)| *k == n) {
            return format!("C, known={known} (not computed)");
        }
    }
    let mut degrees: Vec<String> = rows
        .iter()
        .map(|r| match (r.contextual, r.degree, r.degree_proven) {
            (false, _, _) => "0".to_string(),
            (true, Some(d), true) => d.to_string(),
            (true, Some(d), false) => format!("≤{d}"),
            (true, None, _) => "C".to_string(),
        })
        .collect();
    degrees.sort();
    degrees.dedup();
    count(degrees.join("/"))
}

fn aligned(header: &[String], body: &[Vec<String>]) -> String {
    let cols = header.len();
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            std::iter::once(&header[c])
                .chain(body.iter().map(|r| &r[c]))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    let line = |out: &mut String, cells: &[String]| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(s, &w)| format!("{s}{}", " ".repeat(w - s.chars().count())))
            .collect();
        let _ = writeln!(out, "{}", padded.join("  ").trim_end());
    };
    line(&mut out, header);
    let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
    line(&mut out, &rule);
    for r in body {
        line(&mut out, r);
    }
    out
}

/// Sizes of the generated geometries.
pub fn cardinality_table(spaces: &[PolarSpace]) -> String {
    let mut header = vec!["geometry".to_string()];
    header.extend(spaces.iter().map(|s| format!("n={}", s.n())));
    let mut body = vec![
        row("points", spaces, |s| s.num_points().to_string()),
        row("lines", spaces, |s| s.lines().len().to_string()),
        row("generators", spaces, |s| s.generators().len().to_string()),
    ];
    for family in [
        GeometryFamily::Hyperbolic,
        GeometryFamily::Elliptic,
        GeometryFamily::Perpset,
    ] {
        body.push(row(&format!("{family} members"), spaces, |s| {
            s.family_members(family).len().to_string()
        }));
        body.push(row(&format!("{family} points/lines"), spaces, |s| {
            let id = s.family_members(family)[0];
            let g = s.geometry(&id).expect("family members are valid");
            format!("{}/{}", g.points.len(), g.contexts.len())
        }));
    }
    aligned(&header, &body)
}

fn row(label: &str, spaces: &[PolarSpace], f: impl Fn(&PolarSpace) -> String) -> Vec<String> {
    let mut r = vec![label.to_string()];
    r.extend(spaces.iter().map(f));
    r
}

/// Degrees with one row per family and one column per rank.
pub fn degree_table(by_n: &[RankRows]) -> String {
    let mut header = vec!["family".to_string()];
    header.extend(by_n.iter().map(|(n, _)| format!("n={n}")));
    let body: Vec<Vec<String>> = GeometryFamily::ALL
        .iter()
        .map(|&family| {
            let mut r = vec![family.to_string()];
            for (n, families) in by_n {
                let rows = families
                    .iter()
                    .find(|(f, _)| *f == family)
                    .map(|(_, r)| r.as_slice())
                    .unwrap_or(&[]);
                r.push(degree_cell(*n, family, rows));
            }
            r
        })
        .collect();
    aligned(&header, &body)
}

/// Inequality quantities of the first member of each quadric family.
pub fn inequality_table(rows: &[&ReportRow]) -> String {
    let header: Vec<String> = [
        "quadric",
        "observables",
        "contexts",
        "negative",
        "d",
        "b",
        "b/N",
        "epsilon",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    let fmt_opt = |v: Option<f64>| {
        v.map_or("-".to_string(), |x| {
            format!("{x:.4}")
                .trim_end_matches('0')
                .trim_end_matches('.')
                .to_string()
        })
    };
    let body: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            let d = match (r.degree, r.degree_proven) {
                (Some(d), true) => d.to_string(),
                (Some(d), false) => format!("≤{d}"),
                (None, _) => "C".into(),
            };
            vec![
                r.member.clone(),
                r.points.to_string(),
                r.contexts.to_string(),
                r.negative_contexts.to_string(),
                d,
                r.b.map_or("-".into(), |b| b.to_string()),
                fmt_opt(r.b.filter(|_| r.contexts > 0).map(|b| b as f64 / r.contexts as f64)),
                fmt_opt(r.epsilon),
            ]
        })
        .collect();
    aligned(&header, &body)
}

pub fn rows_to_csv(rows: &[ReportRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}
