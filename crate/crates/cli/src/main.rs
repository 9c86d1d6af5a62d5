use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use serde_json::{json, Value};
use weylwalk::boundary::{invert_drift_rat, CentralMeasure};
use weylwalk::montecarlo::{lln_check, sample_trajectory};
use weylwalk::paths::GraphKind;
use weylwalk::polytope::{dominant_faces, faces_to_json, locate};
use weylwalk::rootdata::build_root_system;
use weylwalk::verify::{run_criterion, suite_models, CheckResult, CRITERIA};
use weylwalk::{Caps, Model};

mod args;

use args::*;

enum Failure {
    Usage(String),
    Domain(weylwalk::Error),
}

impl From<weylwalk::Error> for Failure {
    fn from(e: weylwalk::Error) -> Self {
        Failure::Domain(e)
    }
}

struct Output {
    json: Value,
    csv: Option<String>,
    text: Option<String>,
    ok: bool,
}

impl Output {
    fn json(json: Value) -> Self {
        Output { json, csv: None, text: None, ok: true }
    }

    fn with_csv(mut self, csv: String) -> Self {
        self.csv = Some(csv);
        self
    }
}

fn csv_row<T: ToString>(cells: impl IntoIterator<Item = T>) -> String {
    cells.into_iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",") + "\n"
}

fn model(a: &ModelArgs, caps: Caps) -> Result<Model, Failure> {
    Ok(Model::new(a.ty, a.delta.coords(), caps)?)
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let caps = cli.caps.caps().map_err(Failure::Usage)?;
    match &cli.command {
        Command::Root { action: RootAction::Info { ty } } => {
            let datum = build_root_system(*ty)?;
            let mut csv = String::new();
            for row in &datum.cartan {
                csv += &csv_row(row);
            }
            Ok(Output::json(datum.to_json()).with_csv(csv))
        }
        Command::Crystal { action: CrystalAction::Build { model: a, dot } } => {
            let m = model(a, caps)?;
            let mut csv = csv_row(["id".to_string()].into_iter().chain((1..=m.rank()).map(|i| format!("omega_{i}"))));
            for (k, l) in m.crystal.letters.iter().enumerate() {
                csv += &csv_row(std::iter::once(k as i64).chain(l.weight.coords().iter().copied()));
            }
            let mut out = Output::json(m.crystal.to_json()).with_csv(csv);
            if *dot {
                out.text = Some(m.crystal.to_dot());
            }
            Ok(out)
        }
        Command::Graph { action: GraphAction::Build { model: a, mode, n } } => {
            let m = model(a, caps)?;
            let g = m.graph((*mode).into(), *n)?;
            let mut csv = csv_row(["level".to_string()].into_iter().chain((1..=m.rank()).map(|i| format!("omega_{i}"))).chain(["count".to_string()]));
            for (k, level) in g.levels.iter().enumerate() {
                for (w, c) in level {
                    csv += &csv_row(std::iter::once(k as i64).chain(w.coords().iter().copied()).chain([*c as i64]));
                }
            }
            Ok(Output::json(g.to_json()).with_csv(csv))
        }
        Command::Polytope { action: PolytopeAction::Faces { model: a, m: point } } => {
            let m = model(a, caps)?;
            let faces = dominant_faces(&m.datum, &m.delta_char);
            let mut csv = csv_row(["simple_roots", "dim", "vertices"]);
            for f in &faces {
                let labels: Vec<String> = f.admissible.labels().iter().map(|i| i.to_string()).collect();
                csv += &csv_row([labels.join(" "), f.dim.to_string(), f.vertices.len().to_string()]);
            }
            let mut json = json!({"cartan_type": m.datum.ty.to_string(), "delta": m.delta.coords(), "faces": faces_to_json(&faces)});
            if let Some(p) = point {
                if p.rank() != m.rank() {
                    return Err(Failure::Usage(format!("--m needs {} coordinates", m.rank())));
                }
                let loc = locate(&m.datum, &m.delta, p);
                json["location"] = json!({
                    "inside": loc.inside,
                    "dominant_conjugate": loc.y.coords().iter().map(weylwalk::rational::fmt_q).collect::<Vec<_>>(),
                    "w_word": m.datum.element(loc.w).word_1based(),
                    "face": loc.face.as_ref().map(|f| f.labels()),
                });
            }
            Ok(Output::json(json).with_csv(csv))
        }
        Command::Measure { action: MeasureAction::Eval { model: a, mode, m: point, lambda, n } } => {
            let m = model(a, caps)?;
            let kind: GraphKind = (*mode).into();
            let mu = CentralMeasure::at(&m, kind, invert_drift_rat(&m, point)?)?;
            let mut json = mu.to_json();
            json["dim"] = json!(m.dim_delta());
            let mut csv = String::new();
            if let Some(l) = lambda {
                if l.rank() != m.rank() {
                    return Err(Failure::Usage(format!("--lambda needs {} coordinates", m.rank())));
                }
                let row = mu.kernel_row(l)?;
                json["kernel_row"] = json!(row.iter().map(|(w, p)| json!({"mu": w.coords(), "probability": p})).collect::<Vec<_>>());
                if let Some(n) = n {
                    json["p"] = json!({"lambda": l.coords(), "n": n, "value": mu.p(l, *n)?});
                }
                csv = mu.kernel_csv(&[*l])?;
            }
            Ok(Output::json(json).with_csv(csv))
        }
        Command::Drift { action: DriftAction::Invert { model: a, m: point } } => {
            let m = model(a, caps)?;
            let p = invert_drift_rat(&m, point)?;
            let d = m.rank();
            let mut csv = csv_row(
                (1..=d).map(|i| format!("t_{i}")).chain(["w_word".to_string()]).chain((1..=d).map(|i| format!("drift_{i}"))),
            );
            let word: Vec<String> = m.datum.element(p.w).word_1based().iter().map(|i| i.to_string()).collect();
            csv += &csv_row(p.t.iter().map(|x| x.to_string()).chain([word.join(" ")]).chain(p.drift.iter().map(|x| x.to_string())));
            Ok(Output::json(p.to_json(&m, "boundary_point")).with_csv(csv))
        }
        Command::Sample(s) => {
            let m = model(&s.model, caps)?;
            let mu = CentralMeasure::at(&m, s.mode.into(), invert_drift_rat(&m, &s.m)?)?;
            if s.reps > 1 {
                let r = lln_check(&mu, s.steps, s.reps, s.seed)?;
                let mut csv = csv_row(["rep", "seed", "deviation"]);
                for (k, d) in r.deviations.iter().enumerate() {
                    csv += &csv_row([k.to_string(), (s.seed + k as u64).to_string(), d.to_string()]);
                }
                Ok(Output::json(r.to_json()).with_csv(csv))
            } else {
                let tr = sample_trajectory(&mu, s.steps, s.seed)?;
                let json = json!({
                    "seed": tr.seed,
                    "steps": s.steps,
                    "letters": tr.letters,
                    "positions": tr.positions.iter().map(|p| p.coords().to_vec()).collect::<Vec<_>>(),
                });
                Ok(Output::json(json).with_csv(tr.to_csv()))
            }
        }
        Command::Verify(v) => {
            let models = match (&v.ty, &v.delta) {
                (Some(ty), Some(delta)) => vec![Model::new(*ty, delta.coords(), caps)?],
                _ => suite_models(caps)?,
            };
            let ids: Vec<u8> = match v.suite {
                Suite::All => CRITERIA.to_vec(),
                Suite::One(n) => vec![n],
            };
            let mut results: Vec<CheckResult> = Vec::new();
            for id in ids {
                if id == 10 {
                    results.push(run_criterion(&models[0], id, v.seed)?);
                    continue;
                }
                for m in &models {
                    results.push(run_criterion(m, id, v.seed)?);
                }
            }
            let ok = results.iter().all(|r| r.passed);
            let mut csv = csv_row(["criterion", "name", "type", "delta", "passed"]);
            for r in &results {
                let delta: Vec<String> = r.delta.iter().map(|x| x.to_string()).collect();
                csv += &csv_row([r.criterion.to_string(), r.name.to_string(), r.cartan_type.clone(), delta.join(" "), r.passed.to_string()]);
            }
            let json = json!({"passed": ok, "seed": v.seed, "checks": results});
            Ok(Output { json, csv: Some(csv), text: None, ok })
        }
    }
}

fn error_json(kind: &str, message: &str) -> String {
    json!({"error": {"kind": kind, "message": message}}).to_string()
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            println!("{}", error_json("Usage", e.to_string().trim()));
            return ExitCode::from(2);
        }
    };
    match run(&cli) {
        Ok(out) => {
            let body = match (out.text, cli.format) {
                (Some(text), _) => text,
                (None, Format::Csv) => out.csv.unwrap_or_default(),
                (None, Format::Json) => serde_json::to_string_pretty(&out.json).expect("valid JSON") + "\n",
            };
            // A closed pipe downstream is not an error of ours.
            let _ = std::io::stdout().lock().write_all(body.as_bytes());
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            println!("{}", error_json("Usage", &msg));
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            println!("{}", error_json(e.kind(), &e.to_string()));
            ExitCode::from(2)
        }
    }
}
