//! Command-line front end for the `lrsg` library.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use lrsg::horn::{is_lr_consistent, semigroup_contains};
use lrsg::spectra::he_probe;
use lrsg::tail_cone::lr_consistent_via_tails;
use lrsg::{
    count_tail_positive, generate_facets, lr_coefficient, saturation_scan, ConeQuery, Partition, PartitionTriple,
    SubsetTriple,
};
use serde_json::{json, Value};

#[derive(Debug, Parser)]
#[command(
    name = "lrsg",
    version,
    about = "Littlewood-Richardson coefficients, Horn inequalities and related experiments"
)]
pub struct Cli {
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Tableau,
    Hive,
    Both,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Littlewood-Richardson coefficient c^λ_{μν}.
    Coeff {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// The Horn inequalities for rank r.
    Horn {
        #[arg(long)]
        r: usize,
    },
    /// Cone and semigroup membership of a triple of vectors.
    Member {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
    },
    /// Consistent subset triples of a given cardinality, decided two ways.
    Consistent {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        cardinality: usize,
    },
    /// Lattice points of the cone with vanishing coefficient, and their stretches.
    Saturation {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        max_weight: u32,
        #[arg(long, default_value_t = 4)]
        max_stretch: u32,
    },
    /// Checks the inequalities on spectra of random symmetric matrices.
    Spectra {
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    UsageError,
    Disagreement,
}

impl Status {
    pub fn exit_code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::UsageError => 1,
            Status::Disagreement => 2,
        }
    }

    fn label(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::UsageError => "usage-error",
            Status::Disagreement => "disagreement",
        }
    }
}

#[derive(Clone, Debug)]
pub struct CommandResult {
    pub command: Value,
    pub payload: Value,
    pub status: Status,
    pub text: String,
}

impl CommandResult {
    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "result": self.payload,
            "status": self.status.label(),
        })
    }

    /// Newline-terminated rendering in the requested format.
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => format!("{}\n", self.to_json()),
            Format::Text if self.text.ends_with('\n') => self.text.clone(),
            Format::Text => format!("{}\n", self.text),
        }
    }
}

pub fn run(cli: &Cli) -> Result<CommandResult, lrsg::Error> {
    match &cli.command {
        Command::Coeff { lambda, mu, nu, method } => cmd_coeff(lambda, mu, nu, *method),
        Command::Horn { r } => cmd_horn(*r),
        Command::Member { lambda, mu, nu } => cmd_member(lambda, mu, nu),
        Command::Consistent { r, cardinality } => cmd_consistent(*r, *cardinality),
        Command::Saturation {
            r,
            max_weight,
            max_stretch,
        } => cmd_saturation(*r, *max_weight, *max_stretch),
        Command::Spectra { r, trials, seed } => cmd_spectra(*r, *trials, *seed),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Partitions may be listed with different lengths; all are zero-padded to the longest.
fn parse_partitions(lambda: &str, mu: &str, nu: &str) -> Result<PartitionTriple, lrsg::Error> {
    let parsed: Vec<Partition> = [lambda, mu, nu].iter().map(|s| s.parse()).collect::<Result<_, _>>()?;
    let r = parsed.iter().map(Partition::rank).max().unwrap_or(0);
    let pad = |p: &Partition| {
        let parts: Vec<i64> = p.parts().iter().map(|&x| i64::from(x)).collect();
        Partition::new(&parts, r)
    };
    PartitionTriple::new(pad(&parsed[0])?, pad(&parsed[1])?, pad(&parsed[2])?)
}

pub fn cmd_coeff(lambda: &str, mu: &str, nu: &str, method: Method) -> Result<CommandResult, lrsg::Error> {
    let t = parse_partitions(lambda, mu, nu)?;
    let tableau = matches!(method, Method::Tableau | Method::Both).then(|| lr_coefficient(&t));
    let hive = matches!(method, Method::Hive | Method::Both).then(|| match t.to_fundamental() {
        Ok(w) => count_tail_positive(&w),
        Err(_) => Default::default(),
    });
    let agree = match (&tableau, &hive) {
        (Some(a), Some(b)) => Some(a == b),
        _ => None,
    };

    let mut payload = json!({ "triple": t });
    let mut text = String::new();
    for (name, value) in [("tableau", &tableau), ("hive", &hive)] {
        if let Some(c) = value {
            payload[name] = json!(c.to_string());
            writeln!(text, "{name}: {c}").unwrap();
        }
    }
    if let Some(agree) = agree {
        payload["agree"] = json!(agree);
        writeln!(text, "agree: {}", yes_no(agree)).unwrap();
    }
    let method_name = match method {
        Method::Tableau => "tableau",
        Method::Hive => "hive",
        Method::Both => "both",
    };
    Ok(CommandResult {
        command: json!({ "name": "coeff", "lambda": lambda, "mu": mu, "nu": nu, "method": method_name }),
        payload,
        status: if agree == Some(false) {
            Status::Disagreement
        } else {
            Status::Ok
        },
        text,
    })
}

pub fn cmd_horn(r: usize) -> Result<CommandResult, lrsg::Error> {
    if r == 0 {
        return Err(lrsg::Error::ZeroRank);
    }
    let facets = generate_facets(r);
    let list: Vec<Value> = facets
        .iter()
        .map(|f| {
            let mut v = json!(f.subsets);
            v["text"] = json!(f.to_string());
            v
        })
        .collect();
    let text = if facets.is_empty() {
        "no inequalities".to_string()
    } else {
        facets.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n")
    };
    Ok(CommandResult {
        command: json!({ "name": "horn", "r": r }),
        payload: json!({ "count": facets.len(), "inequalities": list }),
        status: Status::Ok,
        text,
    })
}

pub fn cmd_member(lambda: &str, mu: &str, nu: &str) -> Result<CommandResult, lrsg::Error> {
    let q = ConeQuery::parse(lambda, mu, nu)?;
    let cone = lrsg::cone_contains(&q, &generate_facets(q.rank()))?;
    // the semigroup only makes sense for triples of partitions
    let semigroup = q.to_partitions().map(|t| semigroup_contains(&t));
    let text = format!(
        "cone: {}\nsemigroup: {}",
        yes_no(cone),
        semigroup.map_or("not applicable", yes_no)
    );
    Ok(CommandResult {
        command: json!({ "name": "member", "lambda": lambda, "mu": mu, "nu": nu }),
        payload: json!({ "cone": cone, "semigroup": semigroup }),
        status: Status::Ok,
        text,
    })
}

pub fn cmd_consistent(r: usize, cardinality: usize) -> Result<CommandResult, lrsg::Error> {
    if r == 0 {
        return Err(lrsg::Error::ZeroRank);
    }
    if cardinality == 0 || cardinality > r {
        return Err(lrsg::Error::CardinalityMismatch);
    }
    let mut consistent = Vec::new();
    let mut disagreements = Vec::new();
    let mut examined = 0usize;
    for st in SubsetTriple::all(r, cardinality) {
        examined += 1;
        let (tableau, tails) = (is_lr_consistent(&st), lr_consistent_via_tails(&st));
        if tableau != tails {
            disagreements.push(json!({ "subsets": st, "tableau": tableau, "tails": tails }));
        }
        if tableau || tails {
            consistent.push(st);
        }
    }
    let mut text: String = consistent.iter().map(|st| format!("{st}\n")).collect();
    write!(
        text,
        "{} consistent of {examined} triples, {} disagreements",
        consistent.len(),
        disagreements.len()
    )
    .unwrap();
    Ok(CommandResult {
        command: json!({ "name": "consistent", "r": r, "cardinality": cardinality }),
        payload: json!({ "examined": examined, "consistent": consistent, "disagreements": disagreements }),
        status: if disagreements.is_empty() {
            Status::Ok
        } else {
            Status::Disagreement
        },
        text,
    })
}

pub fn cmd_saturation(r: usize, max_weight: u32, max_stretch: u32) -> Result<CommandResult, lrsg::Error> {
    if r == 0 {
        return Err(lrsg::Error::ZeroRank);
    }
    let report = saturation_scan(r, max_weight, max_stretch);
    let mut text = format!(
        "r={r} |λ|<={max_weight} N<={max_stretch}: {} triples, {} in cone, {} candidates, {} stretch-positive",
        report.triples_scanned,
        report.in_cone,
        report.candidates.len(),
        report.failures().count()
    );
    for c in &report.candidates {
        let stretches: Vec<String> = c.stretched.iter().map(|(n, v)| format!("N={n}: {v}")).collect();
        write!(text, "\n{} [{}]", c.triple, stretches.join(", ")).unwrap();
    }
    Ok(CommandResult {
        command: json!({ "name": "saturation", "r": r, "max_weight": max_weight, "max_stretch": max_stretch }),
        payload: json!(report),
        status: Status::Ok,
        text,
    })
}

pub fn cmd_spectra(r: usize, trials: u64, seed: u64) -> Result<CommandResult, lrsg::Error> {
    let report = he_probe(r, trials, seed, &generate_facets(r))?;
    let worst = report.worst_margin.map_or("n/a".to_string(), |m| format!("{m:.3e}"));
    let text = format!(
        "r={r} trials={trials} seed={seed}: {} violations, worst margin {worst}, trace error {:.1e}, reconstruction error {:.1e}",
        report.violations.len(),
        report.max_trace_error,
        report.max_reconstruction_error
    );
    Ok(CommandResult {
        command: json!({ "name": "spectra", "r": r, "trials": trials, "seed": seed }),
        payload: json!(report),
        status: Status::Ok,
        text,
    })
}
