//! Command-line front end: argument model, dispatch and deterministic report output.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::diagrams::{CornerFrame, DeltaMode, DiagramAlgebra, DiagramKind, DEFAULT_CAP};
use crate::error::{Error, Result};
use crate::inflation::{verify_decomposition, CheckBudget, InflationLayer};
use crate::input_algebra::InputAlgebra;
use crate::scalars::{Field, FieldDescriptor};
use crate::specht::{dominance_csv, dominance_vanishing_experiment, specht_transfer};
use crate::split_pair::{verify_split_pair, CornerSplitDatum, SplitPairOptions};

#[derive(Parser, Clone, Debug, Serialize, Deserialize)]
#[command(
    name = "diagsplit",
    version,
    about = "Diagram algebras, their inflations and exact split pairs"
)]
pub struct Cli {
    /// Absent only when the configuration comes from `--replay`.
    #[command(subcommand)]
    pub command: Option<Command>,
    #[command(flatten)]
    pub global: GlobalArgs,
}

#[derive(Args, Clone, Debug, Serialize, Deserialize)]
pub struct GlobalArgs {
    /// `q`, `fp:<p>` or `cyc:<r>`.
    #[arg(long, global = true, default_value = "q")]
    pub field: String,
    /// Write the report here instead of stdout.
    #[serde(skip)]
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Largest algebra dimension to build.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    pub cap: usize,
    /// `trivial`, `dual`, or a JSON file in the input-algebra schema.
    #[arg(long, global = true)]
    pub input_algebra: Option<String>,
    /// Rerun the configuration echoed in an earlier report.
    #[serde(skip)]
    #[arg(long, global = true)]
    pub replay: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum KindName {
    Abrauer,
    Cyclotomic,
    Walled,
}

#[derive(Args, Clone, Debug, Default, Serialize, Deserialize)]
pub struct AlgebraArgs {
    #[arg(long, value_enum)]
    pub kind: Option<KindName>,
    #[arg(long)]
    pub n: Option<usize>,
    /// Cyclic group order (cyclotomic) or number of left columns (walled).
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    pub delta: Option<String>,
    /// Trace values `δ_0,…,δ_{r-1}` of the cyclic group algebra.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub deltas: Option<Vec<String>>,
}

#[derive(Subcommand, Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// Dimension by enumeration, by closed formula and by layer ranks.
    Dims(AlgebraArgs),
    /// Check the iterated inflation layer by layer.
    VerifyInflation(AlgebraArgs),
    /// Check the corner split quotient and the induction/restriction pair.
    VerifySplitPair {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long)]
        l: Option<usize>,
        /// Use the idempotents for vanishing loop parameter.
        #[arg(long)]
        delta_zero_mode: bool,
    },
    /// Hom and Ext¹ between induced Specht modules on both sides.
    HomExt {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long)]
        l: Option<usize>,
    },
    /// Dominance-vanishing tables for walled Brauer algebras.
    DominanceTable {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        l: Option<usize>,
    },
    /// Check the axioms of an input algebra.
    ValidateInputAlgebra,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Dims(_) => "dims",
            Command::VerifyInflation(_) => "verify-inflation",
            Command::VerifySplitPair { .. } => "verify-split-pair",
            Command::HomExt { .. } => "hom-ext",
            Command::DominanceTable { .. } => "dominance-table",
            Command::ValidateInputAlgebra => "validate-input-algebra",
        }
    }
}

/// Rendered report and whether every check passed.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub text: String,
    pub passed: bool,
    pub warnings: Vec<String>,
}

fn field_of(g: &GlobalArgs) -> Result<Field> {
    Field::new(FieldDescriptor::parse_flag(&g.field)?)
}

fn scalar(field: &Field, s: Option<&str>) -> Result<crate::scalars::Scalar> {
    s.map_or(Ok(field.one()), |s| field.parse(s))
}

fn input_algebra(g: &GlobalArgs, field: &Field, delta: Option<&str>) -> Result<InputAlgebra> {
    match g.input_algebra.as_deref() {
        None | Some("trivial") => Ok(InputAlgebra::trivial(field, scalar(field, delta)?)),
        Some("dual") => Ok(InputAlgebra::dual_numbers(
            field,
            scalar(field, delta)?,
            field.zero(),
        )),
        Some(path) => {
            if delta.is_some() {
                return Err(Error::InvalidAlgebra(
                    "--delta conflicts with an input-algebra file; δ is tr(1)".into(),
                ));
            }
            let a = InputAlgebra::from_json_file(path.as_ref())?;
            if a.field().descriptor() != field.descriptor() {
                return Err(Error::InvalidAlgebra(format!(
                    "input algebra is over {}, but --field is {}",
                    a.field().descriptor(),
                    field.descriptor()
                )));
            }
            Ok(a)
        }
    }
}

fn required<T: Copy>(v: Option<T>, flag: &str, kind: &str) -> Result<T> {
    v.ok_or_else(|| Error::Parse(format!("--{flag} is required for --kind {kind}")))
}

pub fn build_algebra(g: &GlobalArgs, a: &AlgebraArgs) -> Result<DiagramAlgebra> {
    let field = field_of(g)?;
    let alg = match a.kind.unwrap_or(KindName::Abrauer) {
        KindName::Abrauer => {
            let n = required(a.n, "n", "abrauer")?;
            DiagramAlgebra::new(
                DiagramKind::ABrauer { n },
                &input_algebra(g, &field, a.delta.as_deref())?,
            )?
        }
        KindName::Cyclotomic => {
            let n = required(a.n, "n", "cyclotomic")?;
            let r = required(a.r, "r", "cyclotomic")?;
            let deltas = a
                .deltas
                .as_ref()
                .ok_or_else(|| Error::Parse("--deltas is required for --kind cyclotomic".into()))?;
            let deltas = deltas
                .iter()
                .map(|s| field.parse(s))
                .collect::<Result<Vec<_>>>()?;
            DiagramAlgebra::new(
                DiagramKind::ABrauer { n },
                &InputAlgebra::cyclic_group(&field, r, deltas)?,
            )?
        }
        KindName::Walled => {
            let r = required(a.r, "r", "walled")?;
            let t = required(a.t, "t", "walled")?;
            DiagramAlgebra::walled(&field, r, t, scalar(&field, a.delta.as_deref())?)
        }
    };
    if alg.dim() > g.cap {
        return Err(Error::CapExceeded {
            dim: alg.dim(),
            cap: g.cap,
        });
    }
    Ok(alg)
}

fn double_factorial_odd(n: usize) -> usize {
    (1..=n).map(|k| 2 * k - 1).product()
}

/// Closed-form dimension: `(dim A)^n (2n−1)!!` or `(r+t)!`.
pub fn closed_form_dim(kind: DiagramKind, label_dim: usize) -> usize {
    match kind {
        DiagramKind::ABrauer { n } => label_dim.pow(n as u32) * double_factorial_odd(n),
        DiagramKind::Walled { r, t } => (1..=r + t).product(),
    }
}

fn dims_report(alg: &DiagramAlgebra) -> Result<(Value, bool)> {
    let f = alg.field();
    let mut layers = Vec::new();
    let mut total = 0;
    for l in 0..=alg.kind().max_layer() {
        let layer = InflationLayer::new(alg, l)?;
        let (rank, small) = (layer.partials().len(), layer.small().dim());
        total += rank * rank * small;
        layers.push(
            json!({ "l": l, "rankV": rank, "dimSmall": small, "layerDim": rank * rank * small }),
        );
    }
    let formula = closed_form_dim(alg.kind(), alg.input().dim());
    let passed = alg.dim() == formula && total == formula;
    let v = json!({
        "kind": alg.kind(),
        "field": f.descriptor(),
        "inputAlgebra": alg.input().name(),
        "delta": f.format(&alg.delta()),
        "dim": alg.dim(),
        "closedForm": formula,
        "sumOfLayers": total,
        "layers": layers,
    });
    Ok((v, passed))
}

fn legal_layers(l: Option<usize>, kind: DiagramKind) -> Result<Vec<usize>> {
    match l {
        Some(l) if l > kind.max_layer() => Err(Error::IndexOutOfRange(format!(
            "layer {l} exceeds {} for {kind}",
            kind.max_layer()
        ))),
        Some(l) => Ok(vec![l]),
        None => Ok((0..=kind.max_layer()).collect()),
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

/// Runs one configuration.
pub fn run(cli: &Cli) -> Result<Outcome> {
    let g = &cli.global;
    let command = cli
        .command
        .as_ref()
        .ok_or_else(|| Error::Parse("a subcommand is required".into()))?;
    let mut warnings = Vec::new();
    if g.cap > DEFAULT_CAP {
        warnings.push(format!(
            "cap raised to {} above the default {DEFAULT_CAP}",
            g.cap
        ));
    }
    if g.format == Format::Csv && !matches!(command, Command::DominanceTable { .. }) {
        return Err(Error::Parse(
            "--format csv is only available for dominance-table".into(),
        ));
    }
    let (result, passed, csv) = match command {
        Command::Dims(a) => {
            let (v, p) = dims_report(&build_algebra(g, a)?)?;
            (v, p, None)
        }
        Command::VerifyInflation(a) => {
            let alg = build_algebra(g, a)?;
            let budget = CheckBudget {
                seed: g.seed,
                ..CheckBudget::default()
            };
            let r = verify_decomposition(&alg, budget)?;
            (to_value(&r), r.passed(), None)
        }
        Command::VerifySplitPair {
            algebra,
            l,
            delta_zero_mode,
        } => {
            let alg = build_algebra(g, algebra)?;
            let layers = legal_layers(*l, alg.kind())?;
            let mode = delta_zero_mode.then_some(DeltaMode::Zero);
            // Reject illegal δ-mode combinations before building anything.
            for &l in &layers {
                match mode {
                    None => CornerFrame::for_algebra(&alg, l)?,
                    Some(m) => CornerFrame::new(alg.kind(), l, m, &alg.delta(), alg.field())?,
                };
            }
            let opts = SplitPairOptions {
                mode,
                cap: g.cap,
                seed: g.seed,
                big_sequences: true,
            };
            let reports = layers
                .iter()
                .map(|&l| verify_split_pair(&alg, l, opts))
                .collect::<Result<Vec<_>>>()?;
            let passed = reports.iter().all(|r| r.passed());
            (json!({ "reports": to_value(&reports) }), passed, None)
        }
        Command::HomExt { algebra, l } => {
            let alg = build_algebra(g, algebra)?;
            let mut layers = Vec::new();
            let mut passed = true;
            for l in legal_layers(*l, alg.kind())? {
                let datum = CornerSplitDatum::new(&alg, l, None, g.cap)?;
                let rows = specht_transfer(&datum)?;
                passed &= rows.iter().all(|r| r.agrees);
                layers.push(json!({ "l": l, "rows": to_value(&rows) }));
            }
            (
                json!({ "kind": alg.kind(), "field": alg.field().descriptor(), "layers": layers }),
                passed,
                None,
            )
        }
        Command::DominanceTable { r, t, l } => {
            let field = field_of(g)?;
            let kind = DiagramKind::Walled { r: *r, t: *t };
            let tables = legal_layers(*l, kind)?
                .into_iter()
                .map(|l| dominance_vanishing_experiment(&field, *r, *t, l, g.cap))
                .collect::<Result<Vec<_>>>()?;
            let passed = tables.iter().all(|t| t.passed());
            let csv = (g.format == Format::Csv)
                .then(|| dominance_csv(&tables))
                .transpose()?;
            (json!({ "tables": to_value(&tables) }), passed, csv)
        }
        Command::ValidateInputAlgebra => {
            let field = field_of(g)?;
            let a = input_algebra(g, &field, None)?;
            let r = a.validate();
            (to_value(&r), r.all_pass(), None)
        }
    };
    if let Some(text) = csv {
        return Ok(Outcome {
            text,
            passed,
            warnings,
        });
    }
    let mut report = json!({
        "command": command.name(),
        "config": to_value(cli),
        "seed": g.seed,
        "passed": passed,
    });
    if let (Value::Object(out), Value::Object(extra)) = (&mut report, result) {
        for (k, v) in extra {
            out.entry(k).or_insert(v);
        }
    }
    // `serde_json::Map` is ordered by key, so the rendering is canonical.
    let mut text = serde_json::to_string_pretty(&report).expect("json renders");
    text.push('\n');
    Ok(Outcome {
        text,
        passed,
        warnings,
    })
}

/// Reconstructs the configuration of an earlier JSON report.
pub fn replay_config(report: &str) -> Result<Cli> {
    let v: Value = serde_json::from_str(report).map_err(|e| Error::Parse(e.to_string()))?;
    let config = v
        .get("config")
        .ok_or_else(|| Error::Parse("report has no config echo".into()))?;
    serde_json::from_value(config.clone()).map_err(|e| Error::Parse(e.to_string()))
}
