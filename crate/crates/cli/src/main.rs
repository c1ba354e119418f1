mod sweep;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use burnside_core::burnside::GroupFamily;
use burnside_core::export::{self, Artifact, ExportOptions, Format, LabeledMatrix, Table};
use burnside_core::gfp::Caps;
use burnside_core::verify::{self, Instance, VerificationReport};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::sweep::Sweep;

#[derive(Parser)]
#[command(
    name = "burnside",
    version,
    about = "Exact Burnside-ring and linearization-kernel computations for Z_p^n x Z_p and Z_{p^k} x Z_p"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Ranks of the Burnside, representation and kernel modules, each by
    /// formula and by computation.
    Ranks {
        #[command(flatten)]
        instance: InstanceArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Run verification checks on one instance or a sweep.
    Verify {
        #[arg(long, value_enum)]
        target: Target,
        #[command(flatten)]
        instance: InstanceArgs,
        /// Parameter grid, e.g. "p=2,3;n=1..3;k=1..3".
        #[arg(long, value_parser = parse_sweep)]
        sweep: Option<Sweep>,
        /// Instances evaluated concurrently.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
        jobs: u16,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Write a basis, matrix, kernel basis or lattice graph.
    Export {
        #[arg(long, value_enum)]
        artifact: ArtifactArg,
        #[command(flatten)]
        instance: InstanceArgs,
        /// Use the relative module: A' rows for basis, t' for matrix-t, ker f' for kernel.
        #[arg(long)]
        relative: bool,
        /// Subgraph to highlight in lattice-dot: E_i or E_i-E_j.
        #[arg(long)]
        highlight: Option<String>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Check exactness of Z^a -> Z^b -> Z^c for two exported matrices.
    CheckExact {
        #[arg(long)]
        alpha: PathBuf,
        #[arg(long)]
        beta: PathBuf,
        #[command(flatten)]
        instance: InstanceArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Args, Clone, Debug)]
struct InstanceArgs {
    #[arg(long, value_enum)]
    family: Option<FamilyArg>,
    #[arg(long)]
    p: Option<u32>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    /// Overrides BURNSIDE_MAX_AMBIENT_DIM.
    #[arg(long)]
    max_ambient_dim: Option<usize>,
    #[arg(long)]
    max_p: Option<u32>,
}

#[derive(Args, Clone, Debug)]
struct OutputArgs {
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    /// Write here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum FamilyArg {
    Elementary,
    Cyclic,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Target {
    Ses,
    Conjecture,
    CyclicIso,
    All,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum ArtifactArg {
    Basis,
    MatrixF,
    MatrixFprime,
    MatrixT,
    Kernel,
    LatticeDot,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum FormatArg {
    Text,
    Csv,
    Json,
    Dot,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
            FormatArg::Dot => Format::Dot,
        }
    }
}

impl From<ArtifactArg> for Artifact {
    fn from(a: ArtifactArg) -> Self {
        match a {
            ArtifactArg::Basis => Artifact::Basis,
            ArtifactArg::MatrixF => Artifact::MatrixF,
            ArtifactArg::MatrixFprime => Artifact::MatrixFPrime,
            ArtifactArg::MatrixT => Artifact::MatrixT,
            ArtifactArg::Kernel => Artifact::Kernel,
            ArtifactArg::LatticeDot => Artifact::LatticeDot,
        }
    }
}

fn parse_sweep(s: &str) -> Result<Sweep, String> {
    s.parse()
}

/// Exit code with a diagnostic.
#[derive(Debug)]
struct Failure {
    code: u8,
    msg: String,
}

const CHECK_FAILED: u8 = 1;
const INVALID: u8 = 2;
const IO: u8 = 3;

fn invalid(msg: impl Into<String>) -> Failure {
    Failure {
        code: INVALID,
        msg: msg.into(),
    }
}

impl From<burnside_core::Error> for Failure {
    fn from(e: burnside_core::Error) -> Self {
        let code = match e {
            burnside_core::Error::Domain(_) | burnside_core::Error::Resource(_) => INVALID,
            burnside_core::Error::Consistency(_) => CHECK_FAILED,
        };
        Failure {
            code,
            msg: e.to_string(),
        }
    }
}

impl InstanceArgs {
    fn caps(&self) -> Result<Caps, Failure> {
        let mut caps = Caps::from_env()?;
        if let Some(d) = self.max_ambient_dim {
            caps.max_ambient_dim = d;
        }
        if let Some(p) = self.max_p {
            caps.max_p = p;
        }
        Ok(caps)
    }

    fn family_kind(&self, default: FamilyArg) -> FamilyArg {
        self.family
            .unwrap_or(if self.k.is_some() && self.n.is_none() {
                FamilyArg::Cyclic
            } else {
                default
            })
    }

    fn resolve(&self, default: FamilyArg, caps: &Caps) -> Result<GroupFamily, Failure> {
        let p = self.p.ok_or_else(|| invalid("--p is required"))?;
        let family = match self.family_kind(default) {
            FamilyArg::Elementary => {
                if self.k.is_some() {
                    return Err(invalid("--k applies to --family cyclic; use --n"));
                }
                let n = self
                    .n
                    .ok_or_else(|| invalid("--n is required for --family elementary"))?;
                GroupFamily::ElementaryAbelian { p, n }
            }
            FamilyArg::Cyclic => {
                if self.n.is_some() {
                    return Err(invalid("--n applies to --family elementary; use --k"));
                }
                let k = self
                    .k
                    .ok_or_else(|| invalid("--k is required for --family cyclic"))?;
                GroupFamily::CyclicCrossZp { p, k }
            }
        };
        family.validate(caps)?;
        Ok(family)
    }
}

impl OutputArgs {
    fn format(&self, default: FormatArg) -> Format {
        self.format.unwrap_or(default).into()
    }

    fn emit(&self, text: &str) -> Result<(), Failure> {
        let io = |path: &Path, e: std::io::Error| Failure {
            code: IO,
            msg: format!("cannot write {}: {e}", path.display()),
        };
        match &self.output {
            Some(path) => std::fs::write(path, text).map_err(|e| io(path, e)),
            None => {
                let mut out = std::io::stdout().lock();
                out.write_all(text.as_bytes())
                    .and_then(|_| out.flush())
                    .map_err(|e| io(Path::new("<stdout>"), e))
            }
        }
    }
}

fn report_table(reports: &[VerificationReport]) -> Table {
    let rows = reports
        .iter()
        .flat_map(|r| {
            r.checks.iter().map(move |c| {
                vec![
                    r.instance.to_string(),
                    c.name.clone(),
                    c.pass.to_string(),
                    c.computed.clone(),
                    c.expected.clone(),
                    c.method.clone(),
                ]
            })
        })
        .collect();
    Table {
        columns: ["instance", "name", "pass", "computed", "expected", "method"]
            .map(String::from)
            .to_vec(),
        rows,
    }
}

fn render_reports(reports: &[VerificationReport], format: Format) -> Result<String, Failure> {
    Ok(match format {
        Format::Text => reports
            .iter()
            .map(VerificationReport::to_text)
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Csv => report_table(reports).to_csv()?,
        Format::Json => match reports {
            [one] => one.to_json_pretty(),
            many => serde_json::to_string_pretty(many).expect("reports serialize") + "\n",
        },
        Format::Dot => return Err(invalid("reports cannot be written as dot")),
    })
}

fn finish(reports: &[VerificationReport], out: &OutputArgs) -> Result<(), Failure> {
    out.emit(&render_reports(reports, out.format(FormatArg::Text))?)?;
    if reports.iter().all(VerificationReport::passed) {
        Ok(())
    } else {
        Err(Failure {
            code: CHECK_FAILED,
            msg: format!(
                "{} of {} reports failed",
                reports.iter().filter(|r| !r.passed()).count(),
                reports.len()
            ),
        })
    }
}

#[derive(Debug, Clone, Copy)]
enum Task {
    Ses(u32, usize),
    Conjecture(u32, usize),
    CyclicIso(u32, usize),
}

impl Task {
    fn run(self, caps: &Caps) -> burnside_core::Result<VerificationReport> {
        match self {
            Task::Ses(p, n) => verify::verify_ses_with_caps(p, n, caps),
            Task::Conjecture(p, n) => verify::verify_conjecture_with_caps(p, n, caps),
            Task::CyclicIso(p, k) => verify::verify_cyclic_with_caps(p, k, caps),
        }
    }
}

fn elementary_tasks(target: Target, p: u32, n: usize) -> Vec<Task> {
    match target {
        Target::Ses => vec![Task::Ses(p, n)],
        Target::Conjecture => vec![Task::Conjecture(p, n)],
        Target::All => vec![Task::Ses(p, n), Task::Conjecture(p, n)],
        Target::CyclicIso => vec![],
    }
}

fn plan(
    target: Target,
    instance: &InstanceArgs,
    sweep: Option<&Sweep>,
    caps: &Caps,
) -> Result<Vec<Task>, Failure> {
    let Some(sweep) = sweep else {
        let default = if target == Target::CyclicIso {
            FamilyArg::Cyclic
        } else {
            FamilyArg::Elementary
        };
        return Ok(match instance.resolve(default, caps)? {
            GroupFamily::ElementaryAbelian { p, n } => {
                if target == Target::CyclicIso {
                    return Err(invalid("--target cyclic-iso needs --family cyclic"));
                }
                elementary_tasks(target, p, n)
            }
            GroupFamily::CyclicCrossZp { p, k } => {
                if matches!(target, Target::Ses | Target::Conjecture) {
                    return Err(invalid(
                        "--target ses and conjecture need --family elementary",
                    ));
                }
                vec![Task::CyclicIso(p, k)]
            }
        });
    };
    if instance.p.is_some()
        || instance.n.is_some()
        || instance.k.is_some()
        || instance.family.is_some()
    {
        return Err(invalid("--sweep replaces --family, --p, --n and --k"));
    }
    let wants_n = target != Target::CyclicIso;
    let wants_k = matches!(target, Target::CyclicIso | Target::All);
    if wants_n && target != Target::All && sweep.n.is_empty() {
        return Err(invalid("--sweep needs n values for this target"));
    }
    if wants_k && target != Target::All && sweep.k.is_empty() {
        return Err(invalid("--sweep needs k values for this target"));
    }
    if target == Target::All && sweep.n.is_empty() && sweep.k.is_empty() {
        return Err(invalid("--sweep needs n or k values"));
    }
    let mut tasks = Vec::new();
    for &p in &sweep.p {
        if wants_n {
            for &n in &sweep.n {
                GroupFamily::ElementaryAbelian { p, n }.validate(caps)?;
                tasks.extend(elementary_tasks(target, p, n));
            }
        }
    }
    for &p in &sweep.p {
        if wants_k {
            for &k in &sweep.k {
                GroupFamily::CyclicCrossZp { p, k }.validate(caps)?;
                tasks.push(Task::CyclicIso(p, k));
            }
        }
    }
    Ok(tasks)
}

fn cmd_verify(
    target: Target,
    instance: &InstanceArgs,
    sweep: Option<&Sweep>,
    jobs: usize,
    out: &OutputArgs,
) -> Result<(), Failure> {
    let caps = instance.caps()?;
    let tasks = plan(target, instance, sweep, &caps)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| invalid(format!("--jobs: {e}")))?;
    // collect keeps task order whatever the scheduling
    let results: Vec<_> = pool.install(|| tasks.par_iter().map(|t| t.run(&caps)).collect());
    let reports = results
        .into_iter()
        .collect::<burnside_core::Result<Vec<_>>>()?;
    finish(&reports, out)
}

fn cmd_ranks(instance: &InstanceArgs, out: &OutputArgs) -> Result<(), Failure> {
    let caps = instance.caps()?;
    match instance.resolve(FamilyArg::Elementary, &caps)? {
        GroupFamily::ElementaryAbelian { p, n } => {
            let rep = verify::rank_report_with_caps(p, n, &caps)?;
            finish(&[rep], out)
        }
        GroupFamily::CyclicCrossZp { .. } => {
            Err(invalid("ranks is defined for --family elementary"))
        }
    }
}

fn cmd_export(
    artifact: Artifact,
    instance: &InstanceArgs,
    relative: bool,
    highlight: Option<String>,
    out: &OutputArgs,
) -> Result<(), Failure> {
    let caps = instance.caps()?;
    let family = instance.resolve(FamilyArg::Elementary, &caps)?;
    let rendered = export::export(
        family,
        artifact,
        &ExportOptions {
            relative,
            highlight,
        },
        &caps,
    )?;
    let default = if artifact == Artifact::LatticeDot {
        FormatArg::Dot
    } else {
        FormatArg::Csv
    };
    out.emit(&rendered.format(out.format(default))?)
}

fn read_matrix(path: &Path) -> Result<LabeledMatrix, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure {
        code: IO,
        msg: format!("cannot read {}: {e}", path.display()),
    })?;
    LabeledMatrix::parse(&text).map_err(|e| invalid(format!("{}: {e}", path.display())))
}

fn cmd_check_exact(
    alpha: &Path,
    beta: &Path,
    instance: &InstanceArgs,
    out: &OutputArgs,
) -> Result<(), Failure> {
    let caps = instance.caps()?;
    let family = instance.resolve(FamilyArg::Elementary, &caps)?;
    let (a, b) = (read_matrix(alpha)?, read_matrix(beta)?);
    if a.col_labels != b.row_labels {
        return Err(invalid(
            "column labels of --alpha differ from row labels of --beta",
        ));
    }
    let rep =
        verify::verify_exact_pair(Instance::new(family, "check-exact"), &a.matrix, &b.matrix)?;
    finish(&[rep], out)
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Ranks { instance, out } => cmd_ranks(&instance, &out),
        Command::Verify {
            target,
            instance,
            sweep,
            jobs,
            out,
        } => cmd_verify(target, &instance, sweep.as_ref(), jobs as usize, &out),
        Command::Export {
            artifact,
            instance,
            relative,
            highlight,
            out,
        } => cmd_export(artifact.into(), &instance, relative, highlight, &out),
        Command::CheckExact {
            alpha,
            beta,
            instance,
            out,
        } => cmd_check_exact(&alpha, &beta, &instance, &out),
    }
}

fn main() -> ExitCode {
    // clap exits with 2 on usage errors and 0 for --help/--version
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
