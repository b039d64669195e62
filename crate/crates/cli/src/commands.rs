use std::collections::BTreeMap;
use std::fmt::Write as _;

use cig_core::finitegroup::{catalog_specs, from_catalog, parse_group_spec};
use cig_core::{
    cayley, ci_pair, find_isomorphism, is_ci_group, quotient_ci_certificate, verify_wreath_aut_dichotomy, Caps,
    CertificateOptions, CertificateStatus, ElementSet, FiniteGroup, Mode, Verdict,
};
use serde::Serialize;
use serde_json::{json, Value};

use crate::config::{CatalogAction, CiAction, Cli, Command, Emit, QuotientAction, RunConfig, WreathAction};

pub struct Report {
    pub config: RunConfig,
    pub result: Value,
    pub human: String,
    pub status: u8,
}

type CmdResult<T> = Result<T, String>;

fn load_group(spec: &str, caps: &Caps) -> CmdResult<FiniteGroup> {
    parse_group_spec(spec, caps).map_err(|e| format!("group spec '{spec}': {e}"))
}

fn parse_indices(flag: &str, text: &str) -> CmdResult<Vec<usize>> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| format!("--{flag}: '{t}' is not an element index"))
        })
        .collect()
}

fn element_set(g: &FiniteGroup, flag: &str, text: &str) -> CmdResult<ElementSet> {
    let set: ElementSet = parse_indices(flag, text)?.into_iter().collect();
    g.check_set(&set).map_err(|e| format!("--{flag}: {e}"))?;
    Ok(set)
}

fn show_set(g: &FiniteGroup, set: &ElementSet) -> String {
    let idx: Vec<String> = set.iter().map(|x| x.to_string()).collect();
    let plain = format!("{{{}}}", idx.join(", "));
    let labelled = g.format_set(set);
    if labelled == plain {
        plain
    } else {
        format!("{plain} = {labelled}")
    }
}

fn show_map(map: &[usize]) -> String {
    map.iter()
        .enumerate()
        .map(|(i, j)| format!("{i}->{j}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

struct Builder {
    command: &'static str,
    arguments: BTreeMap<String, Value>,
}

impl Builder {
    fn new(command: &'static str) -> Self {
        Builder {
            command,
            arguments: BTreeMap::new(),
        }
    }

    fn arg(mut self, name: &str, value: impl Serialize) -> Self {
        self.arguments.insert(name.to_string(), to_value(&value));
        self
    }

    fn finish(self, cli: &Cli, caps: Caps, result: Value, human: String, status: u8) -> Report {
        Report {
            config: RunConfig {
                command: self.command.to_string(),
                arguments: self.arguments,
                caps,
                threads: cli.threads,
                format: cli.format,
            },
            result,
            human,
            status,
        }
    }
}

pub fn run(cli: &Cli) -> CmdResult<Report> {
    let caps = cli.caps.resolve();
    match &cli.command {
        Command::Catalog {
            action: CatalogAction::List { max_order },
        } => catalog_list(cli, caps, *max_order),
        Command::Cayley { group, set, emit } => cayley_cmd(cli, caps, group, set, *emit),
        Command::Iso { group, set1, set2 } => iso_cmd(cli, caps, group, set1, set2),
        Command::Ci {
            action:
                CiAction::Pair {
                    group,
                    set1,
                    set2,
                    mode,
                },
        } => ci_pair_cmd(cli, caps, group, set1, set2, (*mode).into()),
        Command::Ci {
            action: CiAction::Group { group, mode, budget },
        } => ci_group_cmd(cli, caps, group, (*mode).into(), *budget),
        Command::Quotient {
            action:
                QuotientAction::Verify {
                    group,
                    normal,
                    set1,
                    set2,
                    mode,
                    loop_policy,
                },
        } => {
            let options = CertificateOptions {
                caps,
                mode: (*mode).into(),
                loop_policy: (*loop_policy).into(),
            };
            quotient_verify(cli, options, group, normal, set1, set2)
        }
        Command::Wreath {
            action:
                WreathAction::Aut {
                    g1_group,
                    g1_set,
                    g2_group,
                    g2_set,
                },
        } => wreath_aut(cli, caps, g1_group, g1_set, g2_group, g2_set),
    }
}

fn catalog_list(cli: &Cli, caps: Caps, max_order: usize) -> CmdResult<Report> {
    if max_order > caps.group_order {
        return Err(format!(
            "--max-order {max_order} exceeds the group cap {}",
            caps.group_order
        ));
    }
    let mut rows = Vec::new();
    let mut human = String::new();
    for spec in catalog_specs(max_order) {
        let g = from_catalog(&spec).map_err(|e| e.to_string())?;
        let _ = writeln!(
            human,
            "{spec:<12} order {:>3}  {}",
            g.order(),
            if g.is_abelian() { "abelian" } else { "non-abelian" }
        );
        rows.push(json!({"spec": spec, "order": g.order(), "abelian": g.is_abelian()}));
    }
    let b = Builder::new("catalog list").arg("max_order", max_order);
    Ok(b.finish(cli, caps, json!({ "groups": rows }), human, 0))
}

fn cayley_cmd(cli: &Cli, caps: Caps, spec: &str, set: &str, emit: Option<Emit>) -> CmdResult<Report> {
    let g = load_group(spec, &caps)?;
    let s = element_set(&g, "set", set)?;
    let d = cayley(&g, &s).map_err(|e| e.to_string())?;
    let file = d.to_file();
    let dot = d.to_dot(Some(g.labels()));
    let human = match emit {
        Some(Emit::Dot) => dot.clone(),
        Some(Emit::Json) => format!("{}\n", serde_json::to_string(&file).expect("digraph serializes")),
        None => {
            let mut h = format!(
                "Cay({}, {})\norder {}, {} arcs, {}\n",
                g.name(),
                show_set(&g, &s),
                d.order(),
                d.arc_count(),
                if d.is_undirected() { "undirected" } else { "directed" }
            );
            for v in 0..d.order() {
                let out: Vec<String> = (0..d.order())
                    .filter(|&w| d.has_arc(v, w))
                    .map(|w| w.to_string())
                    .collect();
                let _ = writeln!(h, "  {v} ({}) -> {}", g.label(v), out.join(" "));
            }
            h
        }
    };
    let mut result = json!({
        "group": g.name(),
        "order": g.order(),
        "set": s,
        "undirected": d.is_undirected(),
        "arc_count": d.arc_count(),
        "digraph": file,
    });
    if emit == Some(Emit::Dot) {
        result["dot"] = Value::String(dot);
    }
    let b = Builder::new("cayley")
        .arg("group", spec)
        .arg("set", &s)
        .arg("emit", emit);
    Ok(b.finish(cli, caps, result, human, 0))
}

fn iso_cmd(cli: &Cli, caps: Caps, spec: &str, set1: &str, set2: &str) -> CmdResult<Report> {
    let g = load_group(spec, &caps)?;
    let s1 = element_set(&g, "set1", set1)?;
    let s2 = element_set(&g, "set2", set2)?;
    let d1 = cayley(&g, &s1).map_err(|e| e.to_string())?;
    let d2 = cayley(&g, &s2).map_err(|e| e.to_string())?;
    let map = find_isomorphism(&d1, &d2).map_err(|e| e.to_string())?;
    let human = match &map {
        Some(m) => format!("isomorphic\nmap: {}\n", show_map(m)),
        None => "not isomorphic\n".to_string(),
    };
    let result = json!({"isomorphic": map.is_some(), "map": map});
    let b = Builder::new("iso").arg("group", spec).arg("set1", &s1).arg("set2", &s2);
    Ok(b.finish(cli, caps, result, human, 0))
}

fn ci_pair_cmd(cli: &Cli, caps: Caps, spec: &str, set1: &str, set2: &str, mode: Mode) -> CmdResult<Report> {
    let g = load_group(spec, &caps)?;
    let s1 = element_set(&g, "set1", set1)?;
    let s2 = element_set(&g, "set2", set2)?;
    let r = ci_pair(&g, &s1, &s2, mode, &caps).map_err(|e| e.to_string())?;
    let mut human = format!("{:?}\n", r.verdict);
    if let Some(a) = &r.alpha {
        let _ = writeln!(human, "alpha: {}", show_map(a.images()));
    }
    if let Some(m) = &r.iso {
        let _ = writeln!(human, "isomorphism: {}", show_map(m));
    }
    let status = u8::from(r.verdict == Verdict::NonCIWitness);
    let b = Builder::new("ci pair")
        .arg("group", spec)
        .arg("set1", &s1)
        .arg("set2", &s2)
        .arg("mode", mode);
    Ok(b.finish(cli, caps, to_value(&r), human, status))
}

fn ci_group_cmd(cli: &Cli, caps: Caps, spec: &str, mode: Mode, budget: Option<u64>) -> CmdResult<Report> {
    let g = load_group(spec, &caps)?;
    let v = is_ci_group(&g, mode, budget, &caps).map_err(|e| e.to_string())?;
    let mut human = format!(
        "{} ({mode} mode): {}\n{} connection sets, {} orbits under Aut, {} pairs checked{}\n",
        g.name(),
        if v.is_ci {
            if v.exhaustive {
                "CI"
            } else {
                "no witness within budget"
            }
        } else {
            "not CI"
        },
        v.connection_sets,
        v.orbits,
        v.pairs_checked,
        if v.exhaustive { "" } else { " (budget reached)" }
    );
    if let Some(w) = &v.witness {
        let _ = writeln!(
            human,
            "witness: {} and {} give isomorphic Cayley digraphs\nisomorphism: {}",
            show_set(&g, &w.s),
            show_set(&g, &w.s_prime),
            show_map(&w.iso)
        );
    }
    let b = Builder::new("ci group")
        .arg("group", spec)
        .arg("mode", mode)
        .arg("budget", budget);
    Ok(b.finish(cli, caps, to_value(&v), human, u8::from(!v.is_ci)))
}

fn quotient_verify(
    cli: &Cli,
    options: CertificateOptions,
    spec: &str,
    normal: &str,
    set1: &str,
    set2: &str,
) -> CmdResult<Report> {
    let caps = options.caps;
    let g = load_group(spec, &caps)?;
    let gens = element_set(&g, "normal", normal)?;
    let h = g.subgroup_generated(&gens);
    if !g.is_normal(&h).map_err(|e| e.to_string())? {
        return Err(format!(
            "--normal: the subgroup {} is not normal in {}",
            show_set(&g, &h),
            g.name()
        ));
    }
    let q = g.quotient(&h).map_err(|e| e.to_string())?;
    let reps1 = element_set(&g, "set1", set1)?;
    let reps2 = element_set(&g, "set2", set2)?;
    let (s1, s2) = (q.project_set(&reps1), q.project_set(&reps2));
    let cert = quotient_ci_certificate(&g, &h, &s1, &s2, &options).map_err(|e| e.to_string())?;

    let coset = |c: usize| format!("{}H", g.label(q.cosets.transversal[c]));
    let cosets = |s: &ElementSet| s.iter().map(|&c| coset(c)).collect::<Vec<_>>().join(", ");
    let mut human = format!(
        "G = {} (order {}), H = {}, |G/H| = {}\nS1 = {{{}}}, S2 = {{{}}}\n",
        g.name(),
        g.order(),
        show_set(&g, &h),
        q.target.order(),
        cosets(&s1),
        cosets(&s2)
    );
    if cert.loop_reduced {
        human.push_str("identity coset removed from both sets before lifting\n");
    }
    for (i, side) in [(1, &cert.side1), (2, &cert.side2)] {
        if let Some(side) = side {
            let _ = writeln!(
                human,
                "T{i} = {} ({:?}), |Aut Cay(G,T{i})| = {}",
                show_set(&g, &side.lift.t),
                side.lift.case,
                side.checks.aut_order
            );
        }
    }
    if let Some(a) = &cert.alpha {
        let _ = writeln!(human, "alpha: {}", show_map(a));
    }
    if let Some(a) = &cert.alpha_bar {
        let mapped: Vec<String> = a
            .iter()
            .enumerate()
            .map(|(c, &d)| format!("{}->{}", coset(c), coset(d)))
            .collect();
        let _ = writeln!(human, "alpha-bar: {}", mapped.join(" "));
    }
    for c in &cert.checks {
        let _ = writeln!(human, "  [{}] {}", if c.passed { "ok" } else { "FAILED" }, c.name);
    }
    let (verdict, status) = match &cert.status {
        CertificateStatus::Accepted => ("accepted".to_string(), 0),
        CertificateStatus::NotIsomorphic => (
            "quotient digraphs are not isomorphic; nothing to certify".to_string(),
            0,
        ),
        CertificateStatus::HypothesisFails => (
            "G is not CI at this instance (no automorphism maps T1 to T2)".to_string(),
            1,
        ),
        CertificateStatus::Rejected { failed } => (format!("rejected: {}", failed.join(", ")), 1),
    };
    let _ = writeln!(human, "{verdict}");
    let b = Builder::new("quotient verify")
        .arg("group", spec)
        .arg("normal", &gens)
        .arg("set1", &reps1)
        .arg("set2", &reps2)
        .arg("mode", options.mode)
        .arg("loop_policy", options.loop_policy);
    Ok(b.finish(cli, caps, to_value(&cert), human, status))
}

fn wreath_aut(cli: &Cli, caps: Caps, spec1: &str, set1: &str, spec2: &str, set2: &str) -> CmdResult<Report> {
    let g1 = load_group(spec1, &caps)?;
    let g2 = load_group(spec2, &caps)?;
    let s1 = element_set(&g1, "g1-set", set1)?;
    let s2 = element_set(&g2, "g2-set", set2)?;
    let d1 = cayley(&g1, &s1).map_err(|e| e.to_string())?;
    let d2 = cayley(&g2, &s2).map_err(|e| e.to_string())?;
    let report = verify_wreath_aut_dichotomy(&d1, &d2, &caps).map_err(|e| e.to_string())?;
    let mut human = format!(
        "|Aut G1| = {}, |Aut G2| = {}\n|Aut(G1 wr G2)| = {}, |Aut G1 wr Aut G2| = {}\n",
        report.aut_first, report.aut_second, report.aut_product, report.aut_wreath_of_factors
    );
    match (&report.dichotomy, report.equal) {
        (_, true) => human.push_str("equal\n"),
        (Some(d), false) => {
            let _ = writeln!(
                human,
                "unequal: r = {}, s = {}, inner {:?}; predicted order {} ({})",
                d.r,
                d.s,
                d.inner_kind,
                d.predicted_order,
                if d.matches { "matches" } else { "DOES NOT MATCH" }
            );
        }
        (None, false) => human.push_str("unequal and no dichotomy found\n"),
    }
    let result = to_value(&report);
    let status = u8::from(!report.is_consistent());
    let b = Builder::new("wreath aut")
        .arg("g1_group", spec1)
        .arg("g1_set", &s1)
        .arg("g2_group", spec2)
        .arg("g2_set", &s2);
    Ok(b.finish(cli, caps, result, human, status))
}
