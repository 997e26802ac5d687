use std::fmt::Write as _;
use std::time::Instant;

use serde_json::{json, Map, Value};
use srforest::cm::{
    hilbert_series, is_vertex_decomposable, qf_almost_cm_by_hvector, qf_cm_by_hvector, HilbertSeries,
    VERTEX_DECOMPOSABLE_LIMIT,
};
use srforest::cyclelib::CycleReport;
use srforest::graph::{Chordality, DEFAULT_BERGE_LIMIT};
use srforest::homology::krull_dim;
use srforest::properties::SuiteReport;
use srforest::quasiforest::{
    find_pk, find_sk, is_forest, Obstruction, PkWitness, SkWitness, FOREST_FACET_LIMIT,
};
use srforest::{is_quasi_forest, Engine, Face, Graph, SimplicialComplex};

use crate::input::Input;
use crate::CliError;

fn face_names(c: &SimplicialComplex, f: Face) -> Vec<String> {
    f.iter().map(|v| c.label(v).to_string()).collect()
}

fn vertex_names(labels: &[String], vs: &[usize]) -> Vec<String> {
    vs.iter().map(|&v| labels[v].clone()).collect()
}

fn show_face(names: &[String]) -> String {
    format!("{{{}}}", names.join(","))
}

fn json_strings(v: &Value) -> Vec<String> {
    v.as_array().map(|a| a.iter().filter_map(|s| s.as_str().map(String::from)).collect()).unwrap_or_default()
}

fn yes_no(v: &Value) -> &'static str {
    match v.as_bool() {
        Some(true) => "yes",
        Some(false) => "no",
        None => "n/a",
    }
}

fn sk_json(c: &SimplicialComplex, w: &SkWitness) -> Value {
    json!({ "k": w.k(), "cycle": vertex_names(c.labels(), &w.cycle) })
}

fn pk_json(c: &SimplicialComplex, w: &PkWitness) -> Value {
    match w {
        PkWitness::Point { apex, base } => json!({
            "k": w.k(),
            "apex": c.label(*apex),
            "base": face_names(c, *base),
        }),
        PkWitness::Triangle(s) => json!({ "k": 2, "triangle": vertex_names(c.labels(), &s.cycle) }),
    }
}

fn series_text(s: &HilbertSeries) -> String {
    let mut num = String::new();
    for (i, &h) in s.numerator.iter().enumerate() {
        if h == 0 && s.numerator.len() > 1 {
            continue;
        }
        let mag = h.unsigned_abs();
        if num.is_empty() {
            if h < 0 {
                num.push('-');
            }
        } else {
            num.push_str(if h < 0 { " - " } else { " + " });
        }
        match (i, mag) {
            (0, m) => write!(num, "{m}").unwrap(),
            (_, 1) => {}
            (_, m) => write!(num, "{m}").unwrap(),
        }
        match i {
            0 => {}
            1 => num.push('t'),
            _ => write!(num, "t^{i}").unwrap(),
        }
    }
    format!("({num}) / (1 - t)^{}", s.denominator_exponent)
}

fn echo(input: &Input) -> Value {
    let c = input.complex();
    let facets: Vec<Vec<String>> = c.facets().iter().map(|f| face_names(c, *f)).collect();
    let mut m = Map::new();
    m.insert("n".into(), json!(c.n()));
    m.insert("labels".into(), json!(c.labels()));
    m.insert("facets".into(), json!(facets));
    match input.graph() {
        Some(g) => {
            let edges: Vec<[&str; 2]> = g.edges().iter().map(|&(u, v)| [g.label(u), g.label(v)]).collect();
            m.insert("kind".into(), json!("graph"));
            m.insert("edges".into(), json!(edges));
        }
        None => {
            m.insert("kind".into(), json!("complex"));
        }
    }
    Value::Object(m)
}

/// Verdict, witnesses and forest test; shared by `analyze` and `quasi-forest`.
fn structure(c: &SimplicialComplex) -> Result<Value, CliError> {
    let verdict = is_quasi_forest(c)?;
    let flag_witness = c.is_flag()?;
    let skeleton = Graph::one_skeleton(c).with_labels(c.labels().to_vec());
    let chordality = match skeleton.chordality() {
        Chordality::Chordal { peo } => json!({ "peo": vertex_names(c.labels(), &peo) }),
        Chordality::Hole(w) => json!({ "hole": vertex_names(c.labels(), &w.vertices) }),
    };
    let forest = if c.facets().len() <= FOREST_FACET_LIMIT {
        Some(is_forest(c)?)
    } else {
        None
    };
    let sk = find_sk(c)?;
    let pk = find_pk(c)?;
    let obstruction = verdict.negative.as_ref().map(|o| match o {
        Obstruction::Cycle(w) => json!({ "cycle": sk_json(c, w) }),
        Obstruction::Point(w) => json!({ "point": pk_json(c, w) }),
    });
    let leaf_order = verdict
        .positive
        .as_ref()
        .map(|o| o.order.iter().map(|f| face_names(c, *f)).collect::<Vec<_>>());
    let failing = forest.as_ref().and_then(|f| f.as_ref()).map(|fam| fam.iter().map(|f| face_names(c, *f)).collect::<Vec<_>>());
    Ok(json!({
        "quasi_forest": verdict.is_quasi_forest(),
        "simplex": c.is_simplex(),
        "flag": flag_witness.is_none(),
        "chordal_1_skeleton": matches!(skeleton.chordality(), Chordality::Chordal { .. }),
        "forest": forest.as_ref().map(|f| f.is_none()),
        "methods": {
            "leaf_order": verdict.methods.leaf_order,
            "flag_and_chordal": verdict.methods.flag_and_chordal,
            "no_cycle_or_point": verdict.methods.no_cycle_or_point,
            "regularity_two": verdict.methods.regularity_two,
        },
        "certificates": {
            "leaf_order": leaf_order,
            "obstruction": obstruction,
            "simplicial_cycle": sk.as_ref().map(|w| sk_json(c, w)),
            "simplicial_point": pk.as_ref().map(|w| pk_json(c, w)),
            "minimal_nonface_witness": flag_witness.map(|f| face_names(c, f)),
            "chordality": chordality,
            "failing_subfamily": failing,
        },
    }))
}

fn homology(c: &SimplicialComplex, engine: &Engine) -> Result<Value, CliError> {
    let table = engine.betti_table(c)?;
    let pd = table.proj_dim();
    let reg = table.regularity();
    let depth = c.n() - pd;
    let dim = krull_dim(c);
    let cm = engine.is_cm(c)?;
    let betti: Vec<[u64; 3]> = table.nonzero().iter().map(|&(i, j, b)| [i as u64, j as u64, b]).collect();
    Ok(json!({
        "dim": dim,
        "depth": depth,
        "pd": pd,
        "reg_ring": reg,
        "reg_ideal": if table.is_zero_ideal() { None } else { Some(reg + 1) },
        "cm": cm,
        "almost_cm": depth + 1 >= dim,
        "betti": betti,
    }))
}

fn quasi_forest_checks(c: &SimplicialComplex, engine: &Engine) -> Result<Value, CliError> {
    let bound = engine.froberg_bound_check(c)?;
    Ok(json!({
        "cm_by_h_vector": qf_cm_by_hvector(c)?,
        "almost_cm_by_h_vector": qf_almost_cm_by_hvector(c)?,
        "face_bound": { "f_top": bound.f_top, "bound": bound.bound, "equality": bound.equality },
    }))
}

fn graph_section(g: &Graph) -> Result<Value, CliError> {
    let n = g.n();
    let gap = g.is_gap_free()?;
    let berge = if n <= DEFAULT_BERGE_LIMIT {
        Some(g.is_berge(DEFAULT_BERGE_LIMIT)?)
    } else {
        None
    };
    let odd_hole = berge.as_ref().and_then(|b| b.as_ref()).map(|h| {
        json!({ "in_complement": h.in_complement, "cycle": vertex_names(g.labels(), &h.cycle.vertices) })
    });
    Ok(json!({
        "complement_chordal": g.complement().is_chordal(),
        "gap_free": gap.is_none(),
        "gap": gap.map(|((a, b), (c, d))| vertex_names(g.labels(), &[a, b, c, d])),
        "berge": berge.as_ref().map(|b| b.is_none()),
        "odd_hole": odd_hole,
        "induced_long_cycle": n >= 5 && g.find_chordless_cycle(5, n).is_some(),
    }))
}

pub fn analyze(input: &Input, engine: &Engine, timings: bool) -> Result<Value, CliError> {
    let c = input.complex();
    let mut times = Map::new();
    let mut clock = Instant::now();
    let mut lap = |name: &str, times: &mut Map<String, Value>| {
        times.insert(name.to_string(), json!(clock.elapsed().as_millis() as u64));
        clock = Instant::now();
    };

    let f = c.f_vector()?;
    let h = f.h_vector();
    let series = hilbert_series(c)?;
    lap("face_counts", &mut times);
    let structure = structure(c)?;
    lap("structure", &mut times);
    let hom = homology(c, engine)?;
    lap("homology", &mut times);
    let qf = structure["quasi_forest"].as_bool() == Some(true);
    let qf_checks = if qf { Some(quasi_forest_checks(c, engine)?) } else { None };
    let vd = if c.support().len() <= VERTEX_DECOMPOSABLE_LIMIT {
        Some(is_vertex_decomposable(c)?)
    } else {
        None
    };
    lap("criteria", &mut times);

    let mut flags = Map::new();
    for key in ["quasi_forest", "simplex", "flag", "chordal_1_skeleton", "forest"] {
        flags.insert(key.into(), structure[key].clone());
    }
    flags.insert("cm".into(), hom["cm"].clone());
    flags.insert("almost_cm".into(), hom["almost_cm"].clone());
    flags.insert("vertex_decomposable".into(), json!(vd));

    let mut report = json!({
        "input": echo(input),
        "field": engine.field.name(),
        "f_vector": f.proper(),
        "h_vector": h.0,
        "hilbert_series": { "numerator": series.numerator, "denominator_exponent": series.denominator_exponent },
        "a_invariant": series.a_invariant(),
        "dim": hom["dim"],
        "depth": hom["depth"],
        "pd": hom["pd"],
        "reg_ring": hom["reg_ring"],
        "reg_ideal": hom["reg_ideal"],
        "betti": hom["betti"],
        "flags": flags,
        "methods": structure["methods"],
        "certificates": structure["certificates"],
        "quasi_forest_checks": qf_checks,
    });
    if let Some(g) = input.graph() {
        report["graph"] = graph_section(g)?;
        lap("graph", &mut times);
    }
    if timings {
        report["timings_ms"] = Value::Object(times);
    }
    Ok(report)
}

pub fn quasi_forest(input: &Input) -> Result<Value, CliError> {
    let c = input.complex();
    let mut s = structure(c)?;
    s["input"] = echo(input);
    Ok(s)
}

pub fn cm(input: &Input, engine: &Engine) -> Result<Value, CliError> {
    let c = input.complex();
    let mut hom = homology(c, engine)?;
    let h = c.f_vector()?.h_vector();
    let series = hilbert_series(c)?;
    hom["input"] = echo(input);
    hom["field"] = json!(engine.field.name());
    hom["reisner"] = json!(engine.reisner(c)?);
    hom["h_vector"] = json!(h.0);
    hom["a_invariant"] = json!(series.a_invariant());
    hom["quasi_forest_checks"] = match is_quasi_forest(c)?.is_quasi_forest() {
        true => quasi_forest_checks(c, engine)?,
        false => Value::Null,
    };
    Ok(hom)
}

pub fn survey(rows: &[CycleReport], field: &str) -> Value {
    let rows: Vec<Value> = rows
        .iter()
        .map(|r| {
            json!({
                "n": r.n,
                "dim_formula": r.dim_formula,
                "dim_computed": r.dim_computed,
                "depth_formula": r.depth_formula,
                "depth_computed": r.depth_computed,
                "almost_cm_formula": r.almost_cm_formula,
                "almost_cm_computed": r.almost_cm_computed,
                "cm_formula": r.cm_formula,
                "agree": r.agrees(),
            })
        })
        .collect();
    json!({ "field": field, "rows": rows })
}

pub fn selftest(seed: u64, suites: &[SuiteReport]) -> Value {
    let suites: Vec<Value> = suites
        .iter()
        .map(|s| {
            json!({
                "name": s.name,
                "checked": s.checked,
                "passed": s.passed(),
                "violations": s.violations,
                "notes": s.notes,
            })
        })
        .collect();
    json!({ "seed": seed, "suites": suites })
}

// ---- text rendering -------------------------------------------------------------------

fn witness_text(w: &Value) -> String {
    if let Some(cycle) = w.get("cycle") {
        let names = json_strings(cycle);
        return format!("S_{} = ({})", names.len(), names.join(","));
    }
    if let Some(t) = w.get("triangle") {
        return format!("P_2 (triangle) = ({})", json_strings(t).join(","));
    }
    format!(
        "P_{}: apex {}, base {}",
        w["k"],
        w["apex"].as_str().unwrap_or("?"),
        show_face(&json_strings(&w["base"]))
    )
}

fn structure_text(out: &mut String, s: &Value) {
    let cert = &s["certificates"];
    if s["quasi_forest"].as_bool() == Some(true) {
        if s["simplex"].as_bool() == Some(true) {
            writeln!(out, "quasi-forest (simplex)").unwrap();
        } else {
            writeln!(out, "quasi-forest").unwrap();
        }
        let order: Vec<String> =
            cert["leaf_order"].as_array().into_iter().flatten().map(|f| show_face(&json_strings(f))).collect();
        writeln!(out, "leaf order: {}", order.join(", ")).unwrap();
    } else {
        writeln!(out, "NOT quasi-forest").unwrap();
        if !cert["simplicial_cycle"].is_null() {
            writeln!(out, "simplicial cycle: {}", witness_text(&cert["simplicial_cycle"])).unwrap();
        }
        if !cert["simplicial_point"].is_null() {
            writeln!(out, "simplicial point: {}", witness_text(&cert["simplicial_point"])).unwrap();
        }
    }
    writeln!(out, "flag: {}", yes_no(&s["flag"])).unwrap();
    writeln!(out, "chordal 1-skeleton: {}", yes_no(&s["chordal_1_skeleton"])).unwrap();
    writeln!(out, "forest: {}", yes_no(&s["forest"])).unwrap();
    if let Some(fam) = cert["failing_subfamily"].as_array() {
        let fam: Vec<String> = fam.iter().map(|f| show_face(&json_strings(f))).collect();
        writeln!(out, "leafless subfamily: {}", fam.join(", ")).unwrap();
    }
}

fn tuple(v: &Value) -> String {
    let items: Vec<String> = v.as_array().into_iter().flatten().map(|x| x.to_string()).collect();
    format!("({})", items.join(", "))
}

pub fn analyze_text(r: &Value) -> String {
    let mut out = String::new();
    let input = &r["input"];
    let facets: Vec<String> = input["facets"].as_array().into_iter().flatten().map(|f| show_face(&json_strings(f))).collect();
    let kind = input["kind"].as_str().unwrap_or("complex");
    if kind == "graph" {
        writeln!(out, "graph on {} vertices, analysed via its independence complex", input["n"]).unwrap();
    }
    writeln!(out, "complex on {} vertices with {} facets, field {}", input["n"], facets.len(), r["field"].as_str().unwrap_or("?")).unwrap();
    writeln!(out, "facets: {}", facets.join(" ")).unwrap();
    writeln!(out, "f-vector: {}", tuple(&r["f_vector"])).unwrap();
    writeln!(out, "h-vector: {}", tuple(&r["h_vector"])).unwrap();
    let hs = &r["hilbert_series"];
    let series = HilbertSeries {
        numerator: hs["numerator"].as_array().into_iter().flatten().filter_map(Value::as_i64).collect(),
        denominator_exponent: hs["denominator_exponent"].as_u64().unwrap_or(0) as usize,
    };
    writeln!(out, "Hilbert series: {}   a-invariant: {}", series_text(&series), r["a_invariant"]).unwrap();
    writeln!(
        out,
        "dim: {}   depth: {}   pd: {}   reg(R/I): {}   reg(I): {}",
        r["dim"], r["depth"], r["pd"], r["reg_ring"],
        if r["reg_ideal"].is_null() { "n/a (I = 0)".to_string() } else { r["reg_ideal"].to_string() }
    )
    .unwrap();
    let flags = &r["flags"];
    writeln!(
        out,
        "Cohen-Macaulay: {}   almost Cohen-Macaulay: {}   vertex decomposable: {}",
        yes_no(&flags["cm"]),
        yes_no(&flags["almost_cm"]),
        yes_no(&flags["vertex_decomposable"])
    )
    .unwrap();
    let mut s = r["methods"].clone();
    for key in ["quasi_forest", "simplex", "flag", "chordal_1_skeleton", "forest"] {
        s[key] = flags[key].clone();
    }
    s["certificates"] = r["certificates"].clone();
    structure_text(&mut out, &s);
    if let Some(q) = r["quasi_forest_checks"].as_object() {
        let b = &q["face_bound"];
        writeln!(
            out,
            "h-vector criteria: CM {}, almost CM {}; f_(d-1) = {} <= n - d + 1 = {}{}",
            yes_no(&q["cm_by_h_vector"]),
            yes_no(&q["almost_cm_by_h_vector"]),
            b["f_top"],
            b["bound"],
            if b["equality"].as_bool() == Some(true) { " (equality)" } else { "" }
        )
        .unwrap();
    }
    if let Some(g) = r.get("graph") {
        writeln!(
            out,
            "graph: complement chordal {}, gap-free {}, Berge {}",
            yes_no(&g["complement_chordal"]),
            yes_no(&g["gap_free"]),
            yes_no(&g["berge"])
        )
        .unwrap();
    }
    writeln!(out, "Betti numbers (i, j, b):").unwrap();
    for e in r["betti"].as_array().into_iter().flatten() {
        writeln!(out, "  {} {} {}", e[0], e[1], e[2]).unwrap();
    }
    out
}

pub fn quasi_forest_text(s: &Value) -> String {
    let mut out = String::new();
    structure_text(&mut out, s);
    out
}

pub fn cm_text(r: &Value) -> String {
    let mut out = String::new();
    writeln!(out, "field: {}", r["field"].as_str().unwrap_or("?")).unwrap();
    writeln!(out, "dim: {}   depth: {}   pd: {}   reg(R/I): {}", r["dim"], r["depth"], r["pd"], r["reg_ring"]).unwrap();
    writeln!(out, "h-vector: {}   a-invariant: {}", tuple(&r["h_vector"]), r["a_invariant"]).unwrap();
    writeln!(out, "Cohen-Macaulay: {}", yes_no(&r["cm"])).unwrap();
    writeln!(out, "almost Cohen-Macaulay: {}", yes_no(&r["almost_cm"])).unwrap();
    if let Some(q) = r["quasi_forest_checks"].as_object() {
        writeln!(out, "quasi-forest h-vector criteria: CM {}, almost CM {}", yes_no(&q["cm_by_h_vector"]), yes_no(&q["almost_cm_by_h_vector"])).unwrap();
    }
    out
}

fn opt(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::Bool(b) => if *b { "yes".into() } else { "no".into() },
        other => other.to_string(),
    }
}

pub fn survey_text(r: &Value) -> String {
    let mut out = String::new();
    writeln!(out, "cycle edge ideals over {}", r["field"].as_str().unwrap_or("?")).unwrap();
    writeln!(out, "{:>4} {:>6} {:>6} {:>8} {:>8} {:>9} {:>9}  status", "n", "dim", "dim*", "depth", "depth*", "almostCM", "almostCM*").unwrap();
    for row in r["rows"].as_array().into_iter().flatten() {
        writeln!(
            out,
            "{:>4} {:>6} {:>6} {:>8} {:>8} {:>9} {:>9}  {}",
            opt(&row["n"]),
            opt(&row["dim_formula"]),
            opt(&row["dim_computed"]),
            opt(&row["depth_formula"]),
            opt(&row["depth_computed"]),
            opt(&row["almost_cm_formula"]),
            opt(&row["almost_cm_computed"]),
            if row["agree"].as_bool() == Some(true) { "AGREE" } else { "DISAGREE" }
        )
        .unwrap();
    }
    writeln!(out, "(* computed homologically; - not computed)").unwrap();
    out
}

pub fn selftest_text(r: &Value) -> String {
    let mut out = String::new();
    writeln!(out, "seed {}", r["seed"]).unwrap();
    for s in r["suites"].as_array().into_iter().flatten() {
        let violations = s["violations"].as_array().map_or(0, Vec::len);
        let notes = s["notes"].as_array().map_or(0, Vec::len);
        writeln!(
            out,
            "{} {}: {} checked, {} violations, {} notes",
            if s["passed"].as_bool() == Some(true) { "PASS" } else { "FAIL" },
            s["name"].as_str().unwrap_or("?"),
            s["checked"],
            violations,
            notes
        )
        .unwrap();
        for v in s["violations"].as_array().into_iter().flatten().take(10) {
            writeln!(out, "  {}", v.as_str().unwrap_or("")).unwrap();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn series_rendering() {
        let s = HilbertSeries { numerator: vec![1, 2, -1], denominator_exponent: 2 };
        assert_eq!(series_text(&s), "(1 + 2t - t^2) / (1 - t)^2");
        let s = HilbertSeries { numerator: vec![1], denominator_exponent: 3 };
        assert_eq!(series_text(&s), "(1) / (1 - t)^3");
        let s = HilbertSeries { numerator: vec![1, 0, 2], denominator_exponent: 3 };
        assert_eq!(series_text(&s), "(1 + 2t^2) / (1 - t)^3");
    }
}
