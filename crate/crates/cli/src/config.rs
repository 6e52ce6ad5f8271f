use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pinnacle_core::{max_cardinality, GenPerm, GroupParams, Method, OracleBudget, PinSet};

use crate::grammar::{parse_perm, parse_range, parse_set};

pub const BUDGET_ENV: &str = "PINNACLE_ORACLE_BUDGET";

#[derive(Debug, Parser)]
#[command(
    name = "pinnacle",
    version,
    about = "Pinnacle sets of colored permutation groups G(m,p,n)"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: CommandArgs,

    /// Counting method.
    #[arg(long, global = true, default_value = "all")]
    pub method: Method,

    /// Largest group order the exhaustive oracle may scan.
    #[arg(long, global = true, env = BUDGET_ENV)]
    pub budget: Option<u64>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write data here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct GroupArgs {
    #[arg(long)]
    pub m: u32,
    #[arg(long, default_value_t = 1)]
    pub p: u32,
    #[arg(long)]
    pub n: u32,
}

#[derive(Debug, Subcommand)]
pub enum CommandArgs {
    /// Number of admissible pinnacle sets of size at most d.
    Count {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        d: Option<u32>,
    },
    /// Admissibility of a set under all three deciders.
    Check {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        set: String,
    },
    /// Canonical witness of an admissible set.
    Witness {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        set: String,
    },
    /// Pinnacle set, peaks, color sum and subgroup membership of a permutation.
    Pinnacles {
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = 1)]
        p: u32,
        /// Defaults to the number of tokens in --perm.
        #[arg(long)]
        n: Option<u32>,
        /// Whitespace-separated values w(n) ... w(1).
        #[arg(long, allow_hyphen_values = true)]
        perm: String,
    },
    /// Grid of totals #APS(m,n).
    Table {
        #[arg(long, default_value = "1..10")]
        m: String,
        #[arg(long, default_value = "3..12")]
        n: String,
    },
    /// Exhaustive scan of the group.
    Oracle {
        #[command(flatten)]
        group: GroupArgs,
        /// Compare the scanned counts with the formulas.
        #[arg(long)]
        diff: bool,
    },
    /// Color-shift a set or permutation from modulus m to m + k.
    Shift {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        k: u32,
        #[arg(long, conflicts_with = "perm", required_unless_present = "perm")]
        set: Option<String>,
        #[arg(long)]
        perm: Option<String>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Count { group: GroupParams, d: u32 },
    Check { group: GroupParams, set: PinSet },
    Witness { group: GroupParams, set: PinSet },
    Pinnacles { group: GroupParams, perm: GenPerm },
    Table { m: (u32, u32), n: (u32, u32) },
    Oracle { group: GroupParams, diff: bool },
    ShiftSet { group: GroupParams, k: u32, set: PinSet },
    ShiftPerm { group: GroupParams, k: u32, perm: GenPerm },
}

/// A validated invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliConfig {
    pub command: Command,
    pub method: Method,
    pub budget: OracleBudget,
    pub format: Format,
    pub output: Option<PathBuf>,
}

fn group(args: &GroupArgs) -> Result<GroupParams, String> {
    GroupParams::new(args.m, args.p, args.n).map_err(|e| e.to_string())
}

impl TryFrom<Cli> for CliConfig {
    type Error = String;

    fn try_from(cli: Cli) -> Result<Self, String> {
        let mut budget = OracleBudget::default();
        if let Some(b) = cli.budget {
            if b == 0 {
                return Err("oracle budget must be positive".into());
            }
            budget = budget.with_max_order(b);
        }
        let command = match cli.command {
            CommandArgs::Count { group: ref args, d } => {
                let group = group(args)?;
                let max = max_cardinality(group.n());
                let d = d.unwrap_or(max);
                if d > max {
                    return Err(format!("d = {d} exceeds the maximum {max} for n = {}", group.n()));
                }
                Command::Count { group, d }
            }
            CommandArgs::Check {
                group: ref args,
                ref set,
            } => {
                let group = group(args)?;
                let set = parse_set(set, group.ambient()).map_err(|e| e.to_string())?;
                Command::Check { group, set }
            }
            CommandArgs::Witness {
                group: ref args,
                ref set,
            } => {
                let group = group(args)?;
                let set = parse_set(set, group.ambient()).map_err(|e| e.to_string())?;
                Command::Witness { group, set }
            }
            CommandArgs::Pinnacles { m, p, n, ref perm } => {
                let perm = parse_perm(perm, m).map_err(|e| e.to_string())?;
                if let Some(n) = n {
                    if n != perm.degree() {
                        return Err(format!("--n {n} but the permutation has {} entries", perm.degree()));
                    }
                }
                let group = GroupParams::new(m, p, perm.degree()).map_err(|e| e.to_string())?;
                Command::Pinnacles { group, perm }
            }
            CommandArgs::Table { ref m, ref n } => {
                let m = parse_range(m)?;
                let n = parse_range(n)?;
                if m.0 == 0 || n.0 == 0 {
                    return Err("m and n must be positive".into());
                }
                Command::Table { m, n }
            }
            CommandArgs::Oracle { group: ref args, diff } => Command::Oracle {
                group: group(args)?,
                diff,
            },
            CommandArgs::Shift {
                group: ref args,
                k,
                ref set,
                ref perm,
            } => {
                let group = group(args)?;
                match (set, perm) {
                    (Some(set), _) => Command::ShiftSet {
                        group,
                        k,
                        set: parse_set(set, group.ambient()).map_err(|e| e.to_string())?,
                    },
                    (None, Some(perm)) => {
                        let perm = parse_perm(perm, group.m()).map_err(|e| e.to_string())?;
                        if perm.degree() != group.n() {
                            return Err(format!(
                                "--n {} but the permutation has {} entries",
                                group.n(),
                                perm.degree()
                            ));
                        }
                        Command::ShiftPerm { group, k, perm }
                    }
                    (None, None) => return Err("one of --set or --perm is required".into()),
                }
            }
        };
        Ok(CliConfig {
            command,
            method: cli.method,
            budget,
            format: cli.format,
            output: cli.output,
        })
    }
}

impl CliConfig {
    pub fn new(command: Command) -> Self {
        Self {
            command,
            method: Method::All,
            budget: OracleBudget::default(),
            format: Format::Text,
            output: None,
        }
    }

    pub fn with_format(self, format: Format) -> Self {
        Self { format, ..self }
    }
}
