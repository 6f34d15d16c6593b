use std::error::Error as StdError;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use gcsum::chromatic::verify::{verify_theorem, TheoremId};
use gcsum::chromatic::{chi_sums, chi_sums_over_extensions, chromatic_number, predict, PredictFamily};
use gcsum::extension::{
    bipartite_extension_construct, bipartite_preserving_extension, bipartite_swap_extension, complete_extensions,
    extension_via_partition, extension_via_spanning_path, incomplete_extension, partial_extension, PivotRule,
};
use gcsum::graph::io::parse_graph;
use gcsum::graph::Family;
use gcsum::matching::{hall_condition_nc, max_bidistinct_pairs};
use gcsum::patterns::{build_treelike, verify_treelike_chromatic, CompositionSpec};
use gcsum::report::table;
use gcsum::{Bipartition, Graph};

use crate::{Cli, Command, Input};

type Result<T> = std::result::Result<T, Box<dyn StdError>>;

pub struct Output {
    pub text: String,
    pub code: u8,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: 0 }
    }
}

fn json<T: serde::Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn load(input: &Input) -> Result<(String, Graph)> {
    match (&input.file, &input.family) {
        (Some(path), None) => {
            let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
            Ok((path.display().to_string(), parse_graph(&text)?))
        }
        (None, Some(spec)) => {
            let family: Family = spec.parse()?;
            Ok((family.to_string(), family.build()?))
        }
        _ => Err("give exactly one of a graph file and --family".into()),
    }
}

fn write_dot(path: Option<&Path>, g: &Graph) -> Result<()> {
    if let Some(path) = path {
        fs::write(path, g.to_dot()).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    Ok(())
}

fn digits(c: &gcsum::Coloring) -> String {
    c.colors().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn pairs(p: &[(usize, usize)]) -> String {
    p.iter().map(|(u, v)| format!("{u}-{v}")).collect::<Vec<_>>().join(" ")
}

/// `0:1:2:3,4:5:6:7` into parts.
fn parse_partition(text: &str) -> Result<Vec<Vec<usize>>> {
    text.split(',')
        .map(|part| {
            part.split(':')
                .map(|v| v.trim().parse::<usize>().map_err(|_| format!("bad vertex `{v}` in partition").into()))
                .collect()
        })
        .collect()
}

/// `a..b`, `a..=b` (both inclusive) or a single value.
fn parse_range(text: &str) -> Result<std::ops::RangeInclusive<usize>> {
    let bad = || format!("bad range `{text}`; expected a..b or a single value");
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    if let Some((a, b)) = text.split_once("..") {
        let b = b.strip_prefix('=').unwrap_or(b);
        let (a, b) = (num(a)?, num(b)?);
        if a > b {
            return Err(bad().into());
        }
        Ok(a..=b)
    } else {
        let a = num(text)?;
        Ok(a..=a)
    }
}

pub fn run(cli: &Cli) -> Result<Output> {
    let dot = cli.dot.as_deref();
    match &cli.command {
        Command::Chi { input, json: as_json } => {
            let (name, g) = load(input)?;
            write_dot(dot, &g)?;
            let chi = chromatic_number(&g)?;
            Ok(Output::ok(if *as_json {
                json(&serde_json::json!({ "instance": name, "chi": chi }))?
            } else {
                format!("{chi}\n")
            }))
        }
        Command::Sums { input, json: as_json, extensions } => {
            let (name, g) = load(input)?;
            write_dot(dot, &g)?;
            if *extensions {
                sums_over_extensions(&name, &g, *as_json)
            } else {
                let r = chi_sums(&g)?;
                if *as_json {
                    return Ok(Output::ok(json(&r)?));
                }
                let row = vec![
                    name,
                    g.order().to_string(),
                    r.chi.to_string(),
                    r.chi_sum_min.to_string(),
                    r.chi_sum_max.to_string(),
                    digits(&r.witness_min),
                    digits(&r.witness_max),
                ];
                Ok(Output::ok(table(
                    &["instance", "n", "χ", "χ′", "χ⁺", "witness_min", "witness_max"],
                    &[row],
                )))
            }
        }
        Command::Extend { input, mode, min_pivot, json: as_json } => {
            let (_, g) = load(input)?;
            extend(&g, mode, *min_pivot, *as_json, dot)
        }
        Command::Bipartite { input, x, mode, json: as_json } => {
            let (_, g) = load(input)?;
            let p = Bipartition::from_x(&g, x)?;
            bipartite(&g, &p, mode, *as_json, dot)
        }
        Command::Pattern { spec, verify, json: as_json } => {
            let text = fs::read_to_string(spec).map_err(|e| format!("{}: {e}", spec.display()))?;
            let spec: CompositionSpec = serde_json::from_str(&text)?;
            let built = build_treelike(&spec)?;
            write_dot(dot, &built.graph)?;
            if *verify {
                let r = verify_treelike_chromatic(&spec)?;
                let code = if r.matches { 0 } else { 2 };
                let text = if *as_json {
                    json(&r)?
                } else {
                    format!(
                        "n={} m={}\nχ(H)={} χ(G*)={} {}\nwitness {}\n",
                        built.graph.order(),
                        built.graph.edge_count(),
                        r.chi_h,
                        r.chi_gstar,
                        if r.matches { "MATCH" } else { "MISMATCH" },
                        digits(&r.witness)
                    )
                };
                Ok(Output { text, code })
            } else if *as_json {
                Ok(Output::ok(json(&built)?))
            } else {
                Ok(Output::ok(gcsum::graph::io::to_edge_list(&built.graph)))
            }
        }
        Command::Family { kind, params, extended, json: as_json } => family(kind, params, *extended, *as_json, dot),
        Command::Verify { claim, n, list, json: as_json } => {
            if *list {
                let rows: Vec<Vec<String>> = TheoremId::ALL
                    .iter()
                    .map(|id| {
                        let r = id.default_range();
                        vec![id.name().into(), id.code().into(), format!("{}..{}", r.start(), r.end())]
                    })
                    .collect();
                return Ok(Output::ok(table(&["claim", "code", "default range"], &rows)));
            }
            let id: TheoremId = claim.as_deref().unwrap_or_default().parse()?;
            let range = match n {
                Some(text) => parse_range(text)?,
                None => id.default_range(),
            };
            let report = verify_theorem(id, range)?;
            let text = if *as_json { json(&report)? } else { report.to_table() };
            Ok(Output {
                text,
                code: if report.has_mismatch() { 2 } else { 0 },
            })
        }
    }
}

fn sums_over_extensions(name: &str, g: &Graph, as_json: bool) -> Result<Output> {
    let s = chi_sums_over_extensions(g)?;
    if as_json {
        return Ok(Output::ok(json(&s)?));
    }
    let rows: Vec<Vec<String>> = s
        .rows
        .iter()
        .map(|r| {
            vec![
                r.index.to_string(),
                r.class.to_string(),
                pairs(r.matching.pairs()),
                r.chi.to_string(),
                r.chi_sum_min.to_string(),
                r.chi_sum_max.to_string(),
            ]
        })
        .collect();
    let mut out = table(&["extension", "class", "matching", "χ", "χ′", "χ⁺"], &rows);
    let _ = writeln!(
        out,
        "{name}: χ′ over extensions = {} (extension {}), χ⁺ over extensions = {} (extension {})",
        s.chi_sum_min, s.min_extension, s.chi_sum_max, s.max_extension
    );
    let _ = writeln!(out, "{} extensions, {} isomorphism classes", s.rows.len(), s.class_count);
    Ok(Output::ok(out))
}

fn extend(g: &Graph, mode: &crate::ExtendMode, min_pivot: bool, as_json: bool, dot: Option<&Path>) -> Result<Output> {
    let none = || -> Result<Output> { Err("no extension exists".into()) };
    if mode.spanning_path {
        let Some(e) = extension_via_spanning_path(g)? else { return none() };
        write_dot(dot, &e.graph)?;
        if as_json {
            return Ok(Output::ok(json(&e)?));
        }
        let path: Vec<String> = e.path.iter().map(|v| v.to_string()).collect();
        return Ok(Output::ok(format!("path {}\nmatching {}\n", path.join(" "), pairs(e.matching.pairs()))));
    }
    if let Some(text) = &mode.partition {
        let parts = parse_partition(text)?;
        let Some(e) = extension_via_partition(g, &parts)? else { return none() };
        write_dot(dot, &e.graph)?;
        if as_json {
            return Ok(Output::ok(json(&e)?));
        }
        return Ok(Output::ok(format!("matching {}\n", pairs(e.matching.pairs()))));
    }
    if mode.partial {
        let Some(h) = partial_extension(g)? else { return none() };
        write_dot(dot, &h)?;
        let added: Vec<(usize, usize)> = h.edges().iter().copied().filter(|&(u, v)| !g.has_edge(u, v)).collect();
        if as_json {
            return Ok(Output::ok(json(&serde_json::json!({ "added": added, "graph": h }))?));
        }
        return Ok(Output::ok(format!("added {}\n{}-regular\n", pairs(&added), h.max_degree())));
    }
    if mode.incomplete {
        let rule = if min_pivot { PivotRule::MinDegree } else { PivotRule::MaxDegree };
        let Some(e) = incomplete_extension(g, rule)? else { return none() };
        write_dot(dot, &e.graph)?;
        if as_json {
            return Ok(Output::ok(json(&e)?));
        }
        return Ok(Output::ok(format!("pivot {}\nmatching {}\n", e.pivot, pairs(e.matching.pairs()))));
    }
    let set = complete_extensions(g)?;
    if let Some(first) = set.extensions.first() {
        write_dot(dot, &first.graph)?;
    }
    if as_json {
        return Ok(Output::ok(json(&set.to_json())?));
    }
    let mut class_of = vec![0; set.extensions.len()];
    for (c, members) in set.iso_classes.iter().enumerate() {
        for &i in members {
            class_of[i] = c;
        }
    }
    let rows: Vec<Vec<String>> = set
        .extensions
        .iter()
        .enumerate()
        .map(|(i, e)| vec![i.to_string(), class_of[i].to_string(), pairs(e.matching.pairs())])
        .collect();
    let mut out = table(&["extension", "class", "matching"], &rows);
    let _ = writeln!(out, "{} extensions, {} isomorphism classes", set.extensions.len(), set.iso_classes.len());
    Ok(Output::ok(out))
}

fn bipartite(g: &Graph, p: &Bipartition, mode: &crate::BipartiteMode, as_json: bool, dot: Option<&Path>) -> Result<Output> {
    if mode.ell {
        let r = max_bidistinct_pairs(g, p)?;
        return Ok(Output::ok(if as_json {
            json(&r)?
        } else {
            format!("ell {}\npairs {}\n", r.ell, pairs(&r.pairs))
        }));
    }
    if mode.hall {
        let holds = hall_condition_nc(g, p)?;
        return Ok(Output::ok(if as_json {
            json(&serde_json::json!({ "hall": holds }))?
        } else {
            format!("{holds}\n")
        }));
    }
    let (graph, text, value) = if mode.preserve {
        let h = bipartite_preserving_extension(g, p)?;
        let added: Vec<(usize, usize)> = h.edges().iter().copied().filter(|&(u, v)| !g.has_edge(u, v)).collect();
        let text = format!("added {}\n", pairs(&added));
        let value = serde_json::json!({ "added": added, "graph": h });
        (h, text, value)
    } else if mode.swap {
        let s = bipartite_swap_extension(g, p)?;
        let text = format!(
            "removed {}\nadded {}\nmatching {}\nbipartite {}\n",
            pairs(&s.removed),
            pairs(&s.added),
            pairs(s.matching.pairs()),
            s.graph.is_bipartite().is_some()
        );
        (s.graph.clone(), text, serde_json::to_value(&s)?)
    } else {
        let c = bipartite_extension_construct(g, p)?;
        let text = format!(
            "ell {} used {}\ncross {}\nx pairs {}\ny pairs {}\n",
            c.ell,
            c.pairs_used,
            pairs(&c.cross_pairs),
            pairs(&c.x_pairs),
            pairs(&c.y_pairs)
        );
        (c.graph.clone(), text, serde_json::to_value(&c)?)
    };
    write_dot(dot, &graph)?;
    let r = chi_sums(&graph)?;
    if as_json {
        return Ok(Output::ok(json(&serde_json::json!({ "extension": value, "sums": r }))?));
    }
    Ok(Output::ok(format!("{text}χ {} χ′ {} χ⁺ {}\n", r.chi, r.chi_sum_min, r.chi_sum_max)))
}

fn family(kind: &str, params: &[usize], extended: bool, as_json: bool, dot: Option<&Path>) -> Result<Output> {
    let opt = |v: Option<usize>| v.map_or_else(|| "-".to_string(), |x| x.to_string());
    let (predictor, graph) = match (kind, params, extended) {
        ("path", &[n], false) => (PredictFamily::Path { n }, Some(Family::Path(n).build()?)),
        ("cycle", &[n], false) => (PredictFamily::Cycle { n }, Some(Family::Cycle(n).build()?)),
        ("path", &[n], true) => (PredictFamily::ExtendedPath { n }, Some(Family::Path(n).build()?)),
        ("cycle", &[n], true) => (PredictFamily::ExtendedCycle { n }, Some(Family::Cycle(n).build()?)),
        (_, _, true) => return Err("--extended applies to path and cycle only".into()),
        _ => (PredictFamily::from_name(kind, params)?, None),
    };
    let published = predict(predictor)?;
    let exact = match &graph {
        None => None,
        Some(g) => {
            write_dot(dot, g)?;
            Some(if extended {
                let s = chi_sums_over_extensions(g)?;
                (s.chi_sum_min, s.chi_sum_max)
            } else {
                let r = chi_sums(g)?;
                (r.chi_sum_min, r.chi_sum_max)
            })
        }
    };
    let instance = format!(
        "{}({})",
        predictor.name(),
        params.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
    );
    if as_json {
        return Ok(Output::ok(json(&serde_json::json!({
            "instance": instance,
            "published": published,
            "exact": exact.map(|(lo, hi)| serde_json::json!({ "chi_sum_min": lo, "chi_sum_max": hi })),
        }))?));
    }
    let status = match exact {
        None => "-".to_string(),
        Some((lo, hi)) if lo == published.chi_sum_min && published.chi_sum_max.is_none_or(|p| p == hi) => "MATCH".into(),
        Some(_) => "MISMATCH".into(),
    };
    let row = vec![
        instance,
        opt(exact.map(|e| e.0)),
        published.chi_sum_min.to_string(),
        opt(exact.map(|e| e.1)),
        opt(published.chi_sum_max),
        status,
    ];
    Ok(Output::ok(table(
        &["instance", "χ′_exact", "χ′_published", "χ⁺_exact", "χ⁺_published", "status"],
        &[row],
    )))
}
