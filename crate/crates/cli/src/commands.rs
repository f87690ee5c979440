use std::fs;

use colorgraph::graph::dot::export_dot;
use colorgraph::graph::format::to_text;
use colorgraph::homology::homology;
use colorgraph::jackets::{boundary_degree, gurau_degree, is_melonic, DegreeReport};
use colorgraph::models::{builtin_model, enumerate_vacuum, find_separators, is_member, EnumerateOptions, Family, BUILTIN_MODELS};
use colorgraph::models::separators::standard_probes;
use colorgraph::ribbon::{named_example, RibbonStructure};
use colorgraph::surgery::{boundary_graph, close_all_opened, close_legs, cone, connected_sum, crys_sum, open_edge};
use colorgraph::{Color, ColorSet, ColoredGraph, IsoMode};

use crate::input::{write_graph, write_text, Io};
use crate::output::Output;
use crate::{fixtures, Cli, CliError, Command};

type Res<T> = Result<T, CliError>;

/// Run one command. `Ok(false)` reports a negative verdict (exit 1)
/// after normal output.
pub fn run(cli: &Cli) -> Res<bool> {
    let io = Io { fixtures: cli.fixtures_dir.clone() };
    let mut out = Output::new();
    let mut ok = true;
    match &cli.command {
        Command::Validate { file } => {
            let g = io.graph_unchecked(file)?;
            let report = g.validate();
            ok = report.is_valid();
            let text = if ok { "valid".to_string() } else { format!("invalid: {report}") };
            out.line("valid", ok, text);
            for (i, v) in report.violations.iter().enumerate() {
                out.line(format!("violation.{i}"), v, format!("  {v}"));
            }
        }
        Command::Homology { file } => homology_lines(&io.graph(file)?, &mut out)?,
        Command::Euler { file } => {
            out.pair("chi", colorgraph::homology::euler_characteristic(&io.graph(file)?)?);
        }
        Command::Bubbles { file, colors } => {
            let g = io.graph(file)?;
            let set = parse_color_set(colors)?;
            let bubbles = g.bubbles(set)?;
            out.pair("count", bubbles.len());
            for b in &bubbles {
                let name = b.name(&g);
                out.line(
                    format!("bubble.{name}"),
                    format!("{} {}", b.vertices.len(), b.edges.len()),
                    format!("{name} vertices = {}, edges = {}", b.vertices.len(), b.edges.len()),
                );
            }
        }
        Command::Jackets { file } => {
            let r = gurau_degree(&io.graph(file)?)?;
            jacket_lines(&r, &mut out);
            out.pair("jackets", r.jackets.len());
        }
        Command::Degree { file } => {
            let r = gurau_degree(&io.graph(file)?)?;
            jacket_lines(&r, &mut out);
            degree_lines(&r, &mut out);
        }
        Command::Melonic { file } => {
            out.pair("melonic", is_melonic(&io.graph(file)?)?);
        }
        Command::Boundary { file, out: o } => {
            write_graph(&o.output, &boundary_graph(&io.graph(file)?)?)?;
        }
        Command::BoundaryDegree { file } => {
            out.pair("boundary_degree", boundary_degree(&io.graph(file)?)?);
        }
        Command::Genus { file } => {
            out.pair("genus", io.ribbon(file)?.boundary_report().genus);
        }
        Command::Bc { file } => {
            out.pair("bc", io.ribbon(file)?.boundary_report().bc);
        }
        Command::Sum { a, e, b, f, out: o } => {
            write_graph(&o.output, &connected_sum(&io.graph(a)?, e, &io.graph(b)?, f)?)?;
        }
        Command::CrysSum { a, p, b, q, out: o } => {
            write_graph(&o.output, &crys_sum(&io.graph(a)?, p, &io.graph(b)?, q)?)?;
        }
        Command::Open { file, edge, out: o } => {
            write_graph(&o.output, &open_edge(&io.graph(file)?, edge)?)?;
        }
        Command::Cap { file, l1, l2, all, out: o } => {
            let g = io.graph(file)?;
            let capped = match (l1, l2) {
                _ if *all => close_all_opened(&g)?,
                (Some(a), Some(b)) => close_legs(&g, a, b)?,
                _ => return Err(CliError("cap needs two legs or --all".into())),
            };
            write_graph(&o.output, &capped)?;
        }
        Command::Cone { file, out: o } => {
            write_graph(&o.output, &cone(&io.graph(file)?)?)?;
        }
        Command::Iso { a, b, up_to_permutation } => {
            let mode = if *up_to_permutation { IsoMode::UpToColorPermutation } else { IsoMode::ExactColors };
            let iso = io.graph(a)?.is_isomorphic(&io.graph(b)?, mode);
            out.line("isomorphic", iso, if iso { "isomorphic" } else { "not isomorphic" });
        }
        Command::Member { file, model } => {
            let g = io.graph(file)?;
            let m = builtin_model(model)?;
            let r = is_member(&g, &m)?;
            out.pair("member", r.member);
            for c in &r.components {
                let matched = c.matched.map_or("none".to_string(), |i| i.to_string());
                out.line(
                    format!("component.{}", c.anchor),
                    format!("{} {matched}", c.vertices),
                    format!("  {}: {} vertices, vertex {matched}", c.anchor, c.vertices),
                );
            }
        }
        Command::Build { family, params, genus, out: o } => {
            let mut params = params.clone();
            params.extend(genus);
            write_text(&o.output, &build_text(family, &params)?)?;
        }
        Command::Enumerate { model, k, dedup, connected, output } => {
            let m = builtin_model(model)?;
            let e = enumerate_vacuum(&m, *k, EnumerateOptions { dedup: *dedup, connected_only: *connected })?;
            out.pair("raw", e.raw_count).pair("graphs", e.graphs.len());
            if let Some(dir) = output {
                fs::create_dir_all(dir).map_err(|e| CliError::io(dir.display(), e))?;
                let width = e.graphs.len().to_string().len().max(3);
                for (i, g) in e.graphs.iter().enumerate() {
                    write_graph(&dir.join(format!("graph_{:0width$}.cg", i + 1)), g)?;
                }
            }
        }
        Command::FindSeparators { model, max_vertices, output } => {
            let m = builtin_model(model)?;
            let s = find_separators(&m, *max_vertices, &standard_probes()?)?;
            for (name, sep) in [("p", &s.p), ("m", &s.m)] {
                out.pair(format!("{name}.vertices"), sep.graph.vertex_count());
                out.pair(format!("{name}.edges"), format!("{} {}", sep.k, sep.l));
            }
            out.pair("configurations", s.configurations);
            if let Some(dir) = output {
                fs::create_dir_all(dir).map_err(|e| CliError::io(dir.display(), e))?;
                write_graph(&dir.join("p.cg"), &s.p.graph)?;
                write_graph(&dir.join("m.cg"), &s.m.graph)?;
            }
        }
        Command::ExportDot { file, out: o } => {
            write_text(&o.output, &export_dot(&io.graph(file)?))?;
        }
        Command::Report { file } => ok = report(&io.graph_unchecked(file)?, &mut out)?,
        Command::Fixtures { action } => ok = fixtures::run(*action, &cli.fixtures_dir, &mut out)?,
    }
    print!("{}", out.render(cli.format));
    Ok(ok)
}

/// File contents for `build <family> [params]`; ribbon examples are
/// named `ribbon-<name>`.
pub fn build_text(family: &str, params: &[usize]) -> Res<String> {
    if let Some(name) = family.strip_prefix("ribbon-") {
        if !params.is_empty() {
            return Err(CliError(format!("`{family}` takes no parameters")));
        }
        let r = named_example(name).ok_or_else(|| CliError(format!("unknown ribbon example `{name}`")))?;
        return Ok(r.to_text());
    }
    let f: Family = if family.contains('(') {
        if !params.is_empty() {
            return Err(CliError("give parameters either in parentheses or as arguments".into()));
        }
        family.parse()?
    } else {
        Family::from_parts(family, params)?
    };
    Ok(to_text(&colorgraph::models::build(&f)?)?)
}

fn parse_color_set(s: &str) -> Res<ColorSet> {
    s.chars()
        .filter(|c| *c != ',')
        .map(|c| {
            c.to_digit(16)
                .map(|d| Color(d as u8))
                .ok_or_else(|| CliError(format!("bad color `{c}` in `{s}`")))
        })
        .collect::<Res<Vec<Color>>>()
        .map(ColorSet::from_colors)
}

fn homology_lines(g: &ColoredGraph, out: &mut Output) -> Res<()> {
    let h = homology(g)?;
    for (q, group) in h.groups.iter().enumerate() {
        out.pair(format!("H_{q}"), group);
    }
    out.pair("chi", h.euler);
    Ok(())
}

fn jacket_lines(r: &DegreeReport, out: &mut Output) {
    for j in &r.jackets {
        let cycle = j.cycle_string();
        out.line(
            format!("jacket.{}", cycle.trim_matches(|c| c == '(' || c == ')')),
            format!("{} {}", j.faces.len(), j.genus),
            format!("jacket {cycle}: faces = {}, genus = {}", j.faces.len(), j.genus),
        );
    }
}

fn degree_lines(r: &DegreeReport, out: &mut Output) {
    out.pair("degree", r.degree);
    out.pair("faces", r.faces);
    out.pair("amplitude-exponent", r.amplitude_exponent);
}

fn report(g: &ColoredGraph, out: &mut Output) -> Res<bool> {
    let v = g.validate();
    out.line("valid", v.is_valid(), if v.is_valid() { "validation: valid".into() } else { format!("validation: {v}") });
    if !v.is_valid() {
        return Ok(false);
    }
    out.pair("colors", g.colors().digits())
        .pair("vertices", g.vertex_count())
        .pair("edges", g.edge_count())
        .pair("legs", g.legs().len())
        .pair("components", g.component_count());
    let n = g.colors().len();
    for p in 1..n {
        let parts: Vec<String> = g
            .colors()
            .subsets(p)
            .into_iter()
            .map(|s| Ok(format!("{{{}}}:{}", s.digits(), g.bubbles(s)?.len())))
            .collect::<Res<_>>()?;
        let value = parts.join(" ");
        out.line(format!("{p}-bubbles"), &value, format!("{p}-bubbles: {value}"));
    }
    if g.is_closed() {
        homology_lines(g, out)?;
        if n >= 3 && !g.is_empty() {
            let r = gurau_degree(g)?;
            jacket_lines(&r, out);
            degree_lines(&r, out);
        }
        if n == 3 && !g.is_empty() {
            out.pair("genus", RibbonStructure::from_colored(g)?.boundary_report().genus);
        }
        out.line("boundary", "empty", "boundary: empty");
    } else {
        let b = boundary_graph(g)?;
        let comps = b.connected_components();
        out.line("boundary.components", comps.len(), format!("boundary components: {}", comps.len()));
        if b.colors().len() == 3 {
            let genera = comps
                .iter()
                .map(|c| Ok(RibbonStructure::from_colored(c)?.boundary_report().genus.to_string()))
                .collect::<Res<Vec<_>>>()?
                .join(", ");
            out.line("boundary.genera", &genera, format!("boundary genera: {genera}"));
        }
    }
    for name in BUILTIN_MODELS {
        let m = builtin_model(name)?;
        if m.graph_colors() == g.colors() {
            let member = is_member(g, &m)?.member;
            out.line(format!("member.{name}"), member, format!("member {name}: {member}"));
        }
    }
    Ok(true)
}

