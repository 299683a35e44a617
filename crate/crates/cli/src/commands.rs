use std::fs;

use construct::{
    build_dn_delta_zero, build_dn_from_result, build_regular, build_reinhardt, polygon_to_json,
    PolygonSpec,
};
use geom_core::{fmt_sig17, ConvexPolygon, Metrics};
use report::{emit_csv, emit_json, gap_diagnostics, row_for_result};
use signopt::{
    block_pattern_result, search, search_exhaustive, search_mitm_with_budget, solve_delta,
    SignSearchResult, DEFAULT_MITM_BUDGET_MB,
};

use crate::{BuildArgs, CmdError, CmdResult, EngineArg, EngineArgs, MsearchArgs, RenderArgs, TableArgs, TableFormat, VerifyArgs};

pub const BUDGET_ENV: &str = "SMALLPOLY_MITM_MEMORY_BUDGET_MB";

fn mitm_budget(flag: Option<u64>) -> CmdResult<u64> {
    if let Some(mb) = flag {
        return Ok(mb);
    }
    match std::env::var(BUDGET_ENV) {
        Ok(raw) => raw.parse().map_err(|_| CmdError {
            code: 2,
            message: format!("{BUDGET_ENV} must be an integer MiB count, got {raw:?}"),
        }),
        Err(_) => Ok(DEFAULT_MITM_BUDGET_MB),
    }
}

pub fn run_engine(n: u32, engine: EngineArg, budget_flag: Option<u64>) -> CmdResult<SignSearchResult> {
    let result = match engine {
        EngineArg::Auto => search(n)?,
        EngineArg::Exhaustive => search_exhaustive(n)?,
        EngineArg::Mitm => search_mitm_with_budget(n, mitm_budget(budget_flag)?)?,
        EngineArg::Block => block_pattern_result(n)?,
    };
    Ok(result)
}

fn engine_result(n: u32, args: &EngineArgs) -> CmdResult<SignSearchResult> {
    run_engine(n, args.engine, args.mitm_memory_budget_mb)
}

pub fn parse_n_list(raw: &str) -> CmdResult<Vec<u32>> {
    let ns: Result<Vec<u32>, _> = raw.split(',').map(|part| part.trim().parse()).collect();
    match ns {
        Ok(ns) if !ns.is_empty() => Ok(ns),
        _ => Err(CmdError {
            code: 2,
            message: format!("expected a comma-separated list of vertex counts, got {raw:?}"),
        }),
    }
}

fn write_or_print(out: &Option<std::path::PathBuf>, content: &str) -> CmdResult<bool> {
    match out {
        Some(path) => {
            fs::write(path, content)?;
            Ok(true)
        }
        None => {
            print!("{content}");
            Ok(false)
        }
    }
}

fn print_metrics(label: &str, metrics: &Metrics) {
    println!("label = {label}");
    println!("n = {}", metrics.n);
    println!("perimeter = {}", fmt_sig17(metrics.perimeter));
    println!("width = {}", fmt_sig17(metrics.width));
    println!("diameter = {}", fmt_sig17(metrics.diameter));
    println!("perimeter_bound = {}", fmt_sig17(metrics.upper_perimeter));
    println!("width_bound = {}", fmt_sig17(metrics.upper_width));
}

fn entries_text(spec_entries: &[i8]) -> String {
    let inner: Vec<String> = spec_entries.iter().map(|e| e.to_string()).collect();
    format!("[{}]", inner.join(", "))
}

enum Built {
    Chain(ConvexPolygon, PolygonSpec, Metrics, SignSearchResult),
    Baseline(ConvexPolygon, Metrics),
}

fn build_family(
    family: &crate::FamilyArgs,
    engine: &EngineArgs,
    debug_delta_zero: bool,
) -> CmdResult<Built> {
    if family.regular {
        let poly = build_regular(family.n)?;
        let metrics = Metrics::measure(&poly, family.n).map_err(construct::ConstructError::from)?;
        return Ok(Built::Baseline(poly, metrics));
    }
    if let Some(m) = family.reinhardt {
        let poly = build_reinhardt(m, family.n)?;
        let metrics = Metrics::measure(&poly, family.n).map_err(construct::ConstructError::from)?;
        return Ok(Built::Baseline(poly, metrics));
    }
    if debug_delta_zero {
        let (poly, spec, metrics) = build_dn_delta_zero(family.n)?;
        let result = block_pattern_result(family.n)?;
        return Ok(Built::Chain(poly, spec, metrics, result));
    }
    let result = engine_result(family.n, engine)?;
    let (poly, spec, metrics) = build_dn_from_result(&result)?;
    Ok(Built::Chain(poly, spec, metrics, result))
}

pub fn build(args: BuildArgs) -> CmdResult<()> {
    let built = build_family(&args.family, &args.engine, args.debug_delta_zero)?;
    let (doc, label, metrics) = match &built {
        Built::Chain(poly, spec, metrics, _) => {
            (polygon_to_json(poly, Some(spec)), poly.label.clone(), metrics)
        }
        Built::Baseline(poly, metrics) => {
            (polygon_to_json(poly, None), poly.label.clone(), metrics)
        }
    };
    if write_or_print(&args.out, &doc)? {
        print_metrics(&label, metrics);
        if let Built::Chain(_, spec, _, result) = &built {
            println!("M = {}", fmt_sig17(result.m_value));
            println!("sigma = {}", fmt_sig17(result.sigma));
            println!("delta = {}", fmt_sig17(spec.delta));
            println!("engine = {}", result.engine);
        }
    }
    Ok(())
}

pub fn msearch(args: MsearchArgs) -> CmdResult<()> {
    let result = run_engine(args.n, args.engine, args.mitm_memory_budget_mb)?;
    let sol = solve_delta(args.n, result.sigma)?;
    println!("n = {}", args.n);
    println!("engine = {}", result.engine);
    println!("optimal = {}", result.optimal);
    println!("M = {}", fmt_sig17(result.m_value));
    println!("sigma = {}", fmt_sig17(result.sigma));
    println!("delta = {}", fmt_sig17(sol.delta));
    println!("b = {}", entries_text(result.best.entries()));
    Ok(())
}

pub fn table(args: TableArgs) -> CmdResult<()> {
    let ns = parse_n_list(&args.n)?;
    let rows: Vec<_> = ns
        .iter()
        .map(|&n| engine_result(n, &args.engine).and_then(|r| Ok(row_for_result(&r)?)))
        .collect::<CmdResult<_>>()?;
    let doc = match args.format {
        TableFormat::Csv => emit_csv(&rows),
        TableFormat::Json => {
            let diagnostics = gap_diagnostics(&ns)?;
            let mut text = emit_json(&rows, &diagnostics);
            text.push('\n');
            text
        }
    };
    write_or_print(&args.out, &doc)?;
    Ok(())
}

pub fn run_verify(args: VerifyArgs) -> CmdResult<()> {
    let ns = parse_n_list(&args.n)?;
    let lines = crate::verify::run(&ns, args.debug_delta_zero);
    let mut failures = 0usize;
    for line in &lines {
        if line.passed {
            println!("PASS {} (n = {})", line.name, line.n);
        } else {
            println!("FAIL {} (n = {}): {}", line.name, line.n, line.detail);
            failures += 1;
        }
    }
    if failures > 0 {
        return Err(CmdError {
            code: 4,
            message: format!("{failures} of {} checks failed", lines.len()),
        });
    }
    println!("all {} checks passed", lines.len());
    Ok(())
}

pub fn render_figure(args: RenderArgs) -> CmdResult<()> {
    let built = build_family(&args.family, &args.engine, false)?;
    let poly = match &built {
        Built::Chain(poly, ..) => poly,
        Built::Baseline(poly, _) => poly,
    };
    let opts = render::RenderOptions {
        canvas_px: args.canvas_px,
        margin_frac: args.margin_frac,
        side_color: args.side_color.clone(),
        diameter_color: args.diameter_color.clone(),
        show_labels: args.labels,
        caption: args.caption.clone(),
    };
    let doc = render::render_svg(poly, &opts)?;
    write_or_print(&args.out, &doc)?;
    Ok(())
}
