use std::fmt::Write as _;

use pinnacle_core::{
    canonical_witness, count_complex, cross_validate, decide, decide_in_group, decide_recursive, decide_top,
    is_odd_maximal, max_cardinality, reference, shift_perm, shift_set, witnesses_of, Count, Error, GenPerm,
    GroupParams, Method, OracleReport, PinSet, ShiftParams, Verdict,
};
use serde_json::{json, Value};

use crate::config::{CliConfig, Command, Format};
use crate::grammar::{format_perm, format_set};

/// Exit status and the two emitted streams.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// Computes `p_{m,n}(d)` with one method. Substituted in tests to exercise the
/// mismatch path.
pub type Counter<'a> = &'a dyn Fn(Method, u32, u32, u32) -> pinnacle_core::Result<Count>;

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::CountMismatch { .. } => EXIT_MISMATCH,
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        _ => EXIT_INVALID,
    }
}

pub fn run(config: &CliConfig) -> Outcome {
    run_with_counter(config, &pinnacle_core::count_with)
}

pub fn run_with_counter(config: &CliConfig, counter: Counter<'_>) -> Outcome {
    let mut out = Outcome::default();
    let result = Runner {
        config,
        counter,
        out: &mut out,
    }
    .dispatch();
    if let Err(e) = result {
        out.code = exit_code(&e);
        let _ = writeln!(out.stderr, "error: {e}");
    }
    out
}

struct Runner<'a> {
    config: &'a CliConfig,
    counter: Counter<'a>,
    out: &'a mut Outcome,
}

fn params(g: GroupParams) -> Value {
    json!({ "m": g.m(), "p": g.p(), "n": g.n() })
}

fn group_name(g: GroupParams) -> String {
    format!("G({},{},{})", g.m(), g.p(), g.n())
}

impl Runner<'_> {
    fn emit(&mut self, text: &str) {
        self.out.stdout.push_str(text);
        if !text.ends_with('\n') {
            self.out.stdout.push('\n');
        }
    }

    fn emit_json(&mut self, v: Value) {
        let s = serde_json::to_string_pretty(&v).expect("json values serialize");
        self.emit(&s);
    }

    fn warn(&mut self, line: &str) {
        let _ = writeln!(self.out.stderr, "{line}");
    }

    fn dispatch(&mut self) -> pinnacle_core::Result<()> {
        match self.config.command.clone() {
            Command::Count { group, d } => self.count(group, d),
            Command::Check { group, set } => self.check(group, &set),
            Command::Witness { group, set } => self.witness(group, &set),
            Command::Pinnacles { group, perm } => self.pinnacles(group, &perm),
            Command::Table { m, n } => self.table(m, n),
            Command::Oracle { group, diff } => self.oracle(group, diff),
            Command::ShiftSet { group, k, set } => self.shift_set(group, k, &set),
            Command::ShiftPerm { group, k, perm } => self.shift_perm(group, k, &perm),
        }
    }

    fn formula(&self, m: u32, n: u32, d: u32) -> pinnacle_core::Result<Count> {
        match self.config.method {
            Method::All => {
                let values = Method::INDEPENDENT
                    .into_iter()
                    .map(|k| (self.counter)(k, m, n, d).map(|v| (k, v)))
                    .collect::<pinnacle_core::Result<Vec<_>>>()?;
                cross_validate(m, n, d, values)
            }
            k => (self.counter)(k, m, n, d),
        }
    }

    fn counted(&self, g: GroupParams, d: u32) -> pinnacle_core::Result<Count> {
        if is_odd_maximal(g, d) {
            count_complex(g, Some(d), self.config.method, &self.config.budget)
        } else {
            self.formula(g.m(), g.n(), d)
        }
    }

    fn count(&mut self, g: GroupParams, d: u32) -> pinnacle_core::Result<()> {
        let value = self.counted(g, d)?;
        let method = self.config.method;
        match self.config.format {
            Format::Text => self.emit(&value.to_string()),
            Format::Csv => self.emit(&format!(
                "m,p,n,d,method,count\n{},{},{},{d},{method},{value}",
                g.m(),
                g.p(),
                g.n()
            )),
            Format::Json => {
                let mut p = params(g);
                p["d"] = json!(d);
                self.emit_json(json!({ "params": p, "method": method.name(), "value": value.to_string() }));
            }
        }
        Ok(())
    }

    /// A witness inside `g`, if one exists.
    fn group_witness(&self, g: GroupParams, set: &PinSet) -> pinnacle_core::Result<Option<GenPerm>> {
        let w = canonical_witness(set)?;
        if g.contains(&w)? {
            return Ok(Some(w));
        }
        Ok(witnesses_of(set, g, &self.config.budget)?.next())
    }

    fn check(&mut self, g: GroupParams, set: &PinSet) -> pinnacle_core::Result<()> {
        let verdicts = [
            ("canonical", decide(set)),
            ("recursive", decide_recursive(set)),
            ("top-slice", decide_top(set)),
        ];
        let agreed = verdicts
            .iter()
            .all(|(_, v)| v.is_admissible() == verdicts[0].1.is_admissible());
        let mut verdict = verdicts[0].1;
        if verdict.is_admissible() && g.p() > 1 && !decide_in_group(set, g, &self.config.budget)? {
            verdict = Verdict::Inadmissible(pinnacle_core::Rejection::NoWitness);
        }
        let witness = if verdict.is_admissible() {
            self.group_witness(g, set)?
        } else {
            None
        };
        match self.config.format {
            Format::Text => {
                let mut s = format!("{verdict}\n");
                for (name, v) in &verdicts {
                    let _ = writeln!(s, "{name}: {v}");
                }
                if let Some(w) = &witness {
                    let _ = writeln!(s, "witness: {w}");
                }
                self.emit(&s);
            }
            Format::Csv => {
                let mut s = "set,verdict,canonical,recursive,top-slice,witness\n".to_string();
                let _ = write!(s, "{},{verdict}", csv_field(&format_set(set)));
                for (_, v) in &verdicts {
                    let _ = write!(s, ",{}", v.is_admissible());
                }
                let _ = write!(s, ",{}", witness.as_ref().map(format_perm).unwrap_or_default());
                self.emit(&s);
            }
            Format::Json => {
                let mut doc = json!({
                    "params": params(g),
                    "method": "deciders",
                    "value": verdict.to_string(),
                    "set": format_set(set),
                    "deciders": verdicts.iter().map(|(k, v)| (k.to_string(), json!(v.to_string()))).collect::<serde_json::Map<_, _>>(),
                });
                if let Some(w) = &witness {
                    doc["witness"] = json!(format_perm(w));
                }
                self.emit_json(doc);
            }
        }
        if !agreed {
            self.warn("deciders disagree");
            self.out.code = EXIT_MISMATCH;
        }
        Ok(())
    }

    fn witness(&mut self, g: GroupParams, set: &PinSet) -> pinnacle_core::Result<()> {
        let verdict = decide(set);
        if !verdict.is_admissible() {
            self.warn(&format!("{verdict}"));
            self.out.code = EXIT_INVALID;
            return Ok(());
        }
        let Some(w) = self.group_witness(g, set)? else {
            self.warn(&format!("inadmissible: no witness in {}", group_name(g)));
            self.out.code = EXIT_INVALID;
            return Ok(());
        };
        match self.config.format {
            Format::Text => self.emit(&w.to_string()),
            Format::Csv => self.emit(&format!(
                "set,witness,color_sum\n{},{},{}",
                csv_field(&format_set(set)),
                format_perm(&w),
                w.color_sum()
            )),
            Format::Json => self.emit_json(json!({
                "params": params(g),
                "method": "canonical",
                "value": format_set(set),
                "witness": format_perm(&w),
                "color_sum": w.color_sum(),
            })),
        }
        Ok(())
    }

    fn pinnacles(&mut self, g: GroupParams, w: &GenPerm) -> pinnacle_core::Result<()> {
        let pin = w.pinnacle_set();
        let peaks = w.peaks();
        let eps = w.color_sum();
        let member = g.contains(w)?;
        match self.config.format {
            Format::Text => {
                let peaks: Vec<String> = peaks.iter().map(|i| i.to_string()).collect();
                self.emit(&format!(
                    "pinnacles: {pin}\npeaks: {}\ncolor sum: {eps}\nin {}: {}",
                    if peaks.is_empty() {
                        "none".to_string()
                    } else {
                        peaks.join(" ")
                    },
                    group_name(g),
                    if member { "yes" } else { "no" }
                ));
            }
            Format::Csv => {
                let peaks: Vec<String> = peaks.iter().map(|i| i.to_string()).collect();
                self.emit(&format!(
                    "perm,pinnacles,peaks,color_sum,in_subgroup\n{},{},{},{eps},{member}",
                    format_perm(w),
                    csv_field(&format_set(&pin)),
                    peaks.join(" ")
                ));
            }
            Format::Json => self.emit_json(json!({
                "params": params(g),
                "method": "pinnacles",
                "value": format_set(&pin),
                "perm": format_perm(w),
                "peaks": peaks,
                "color_sum": eps,
                "in_subgroup": member,
            })),
        }
        Ok(())
    }

    fn table(&mut self, (m0, m1): (u32, u32), (n0, n1): (u32, u32)) -> pinnacle_core::Result<()> {
        let mut cells = Vec::new();
        for m in m0..=m1 {
            for n in n0..=n1 {
                cells.push((m, n, self.formula(m, n, max_cardinality(n))?));
            }
        }
        match self.config.format {
            Format::Csv => {
                let mut s = "m,n,count\n".to_string();
                for (m, n, c) in &cells {
                    let _ = writeln!(s, "{m},{n},{c}");
                }
                self.emit(&s);
            }
            Format::Text => {
                let width = cells
                    .iter()
                    .map(|(_, _, c)| c.to_string().len())
                    .max()
                    .unwrap_or(1)
                    .max(3);
                let mut s = format!("{:>4}", "m\\n");
                for n in n0..=n1 {
                    let _ = write!(s, " {n:>width$}");
                }
                s.push('\n');
                for row in cells.chunks((n1 - n0 + 1) as usize) {
                    let _ = write!(s, "{:>4}", row[0].0);
                    for (_, _, c) in row {
                        let _ = write!(s, " {:>width$}", c.to_string());
                    }
                    s.push('\n');
                }
                self.emit(&s);
            }
            Format::Json => {
                let rows: Vec<Value> = cells
                    .iter()
                    .map(|(m, n, c)| json!({ "m": m, "n": n, "count": c.to_string() }))
                    .collect();
                self.emit_json(json!({
                    "params": { "m": [m0, m1], "n": [n0, n1] },
                    "method": self.config.method.name(),
                    "value": rows,
                }));
            }
        }
        for (m, n, c) in &cells {
            if let Some(printed) = reference::printed_total(*m, *n) {
                if *c != Count::from(printed) {
                    self.warn(&format!("discrepancy: m={m} n={n} computed {c} printed {printed}"));
                }
            }
        }
        Ok(())
    }

    fn oracle(&mut self, g: GroupParams, diff: bool) -> pinnacle_core::Result<()> {
        let report = pinnacle_core::collect_pinnacle_sets(g, &self.config.budget)?;
        let mut rows = Vec::new();
        let mut mismatch = false;
        if diff {
            for d in 0..=max_cardinality(g.n()) {
                let scanned = Count::from(report.count_up_to(d as usize));
                let formula = self.counted(g, d)?;
                mismatch |= scanned != formula;
                rows.push((d, scanned, formula));
            }
        }
        match self.config.format {
            Format::Text => {
                let mut s = format!(
                    "{}: {} elements scanned, {} admissible pinnacle sets\n",
                    group_name(g),
                    report.scanned(),
                    report.total()
                );
                write_report_text(&mut s, &report);
                for (d, a, b) in &rows {
                    let _ = writeln!(
                        s,
                        "d={d} oracle={a} formula={b} {}",
                        if a == b { "ok" } else { "MISMATCH" }
                    );
                }
                self.emit(&s);
            }
            Format::Csv => {
                let mut s = "set,size,witnesses,eps_min,eps_max\n".to_string();
                for (set, st) in report.sets() {
                    let _ = writeln!(
                        s,
                        "{},{},{},{},{}",
                        csv_field(&format_set(set)),
                        set.len(),
                        st.witnesses,
                        st.eps_min(),
                        st.eps_max()
                    );
                }
                self.emit(&s);
            }
            Format::Json => {
                let sets: Vec<Value> = report
                    .sets()
                    .iter()
                    .map(|(set, st)| {
                        json!({
                            "set": format_set(set),
                            "size": set.len(),
                            "witnesses": st.witnesses,
                            "eps_min": st.eps_min(),
                            "eps_max": st.eps_max(),
                        })
                    })
                    .collect();
                let mut doc = json!({
                    "params": params(g),
                    "method": "oracle",
                    "value": report.total().to_string(),
                    "scanned": report.scanned(),
                    "sets": sets,
                });
                if diff {
                    doc["diff"] = rows
                        .iter()
                        .map(|(d, a, b)| json!({ "d": d, "oracle": a.to_string(), "formula": b.to_string() }))
                        .collect();
                }
                self.emit_json(doc);
            }
        }
        if mismatch {
            self.warn("oracle and formulas disagree");
            self.out.code = EXIT_MISMATCH;
        }
        Ok(())
    }

    fn shift_set(&mut self, g: GroupParams, k: u32, set: &PinSet) -> pinnacle_core::Result<()> {
        let s = ShiftParams::new(g.m(), k, g.n())?;
        let image = shift_set(set, s)?;
        match self.config.format {
            Format::Text => self.emit(&image.to_string()),
            Format::Csv => self.emit(&format!(
                "set,k,image\n{},{k},{}",
                csv_field(&format_set(set)),
                csv_field(&format_set(&image))
            )),
            Format::Json => self.emit_json(json!({
                "params": { "m": g.m(), "n": g.n(), "k": k },
                "method": "shift",
                "value": format_set(&image),
            })),
        }
        Ok(())
    }

    fn shift_perm(&mut self, g: GroupParams, k: u32, w: &GenPerm) -> pinnacle_core::Result<()> {
        let s = ShiftParams::new(g.m(), k, g.n())?;
        let image = shift_perm(w, s)?;
        match self.config.format {
            Format::Text => self.emit(&image.to_string()),
            Format::Csv => self.emit(&format!("perm,k,image\n{},{k},{}", format_perm(w), format_perm(&image))),
            Format::Json => self.emit_json(json!({
                "params": { "m": g.m(), "n": g.n(), "k": k },
                "method": "shift",
                "value": format_perm(&image),
            })),
        }
        Ok(())
    }
}

fn write_report_text(s: &mut String, report: &OracleReport) {
    for (size, sets) in report.by_cardinality() {
        let _ = writeln!(s, "size {size}: {} sets", sets.len());
        for set in sets {
            let st = report.stats(set).expect("listed sets have stats");
            let _ = writeln!(
                s,
                "  {set} witnesses={} eps=[{},{}]",
                st.witnesses,
                st.eps_min(),
                st.eps_max()
            );
        }
    }
}

/// Quotes a field containing commas.
fn csv_field(s: &str) -> String {
    if s.contains(',') {
        format!("\"{s}\"")
    } else {
        s.to_string()
    }
}
