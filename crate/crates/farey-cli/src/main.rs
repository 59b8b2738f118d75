//! `farey`: command-line front end for the farey library.

mod commands;
mod output;
mod render;
mod selfcheck;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "farey", version, about = "Continued fractions, Farey walks, dissections and PSL(2,Z) words")]
pub struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Continued fractions.
    #[command(subcommand)]
    Cf(CfCmd),
    /// 2x2 matrices and their words.
    #[command(subcommand)]
    Mat(MatCmd),
    /// Solutions of M(c) = ±Id.
    #[command(subcommand)]
    Quiddity(QuiddityCmd),
    /// Polygon dissections.
    #[command(subcommand)]
    Dissect(DissectCmd),
    /// Walks on the Farey graph.
    #[command(subcommand)]
    Walk(WalkCmd),
    /// Farey polygons and their triangulations.
    #[command(subcommand)]
    Farey(FareyCmd),
    /// Ptolemy relations and continuant determinants.
    #[command(subcommand)]
    Ptolemy(PtolemyCmd),
    /// Exhaustive census of positive solutions for n = 3..N.
    Census {
        /// Largest polygon size (3..=9).
        #[arg(long, default_value_t = 9)]
        n: usize,
    },
    /// Draw the dissection with the given quiddity.
    Render {
        #[arg(allow_hyphen_values = true)]
        word: String,
        #[command(flatten)]
        out: Drawing,
    },
    /// Seeded randomized checks across every module.
    Selfcheck {
        #[arg(long, default_value_t = selfcheck::DEFAULT_SEED)]
        seed: u64,
        /// Random cases per check.
        #[arg(long, default_value_t = selfcheck::DEFAULT_CASES)]
        cases: usize,
    },
}

#[derive(Args, Debug, Default)]
pub struct Drawing {
    /// Write an SVG drawing to this path.
    #[arg(long, value_name = "PATH")]
    pub svg: Option<PathBuf>,
    /// Write a DOT graph to this path.
    #[arg(long, value_name = "PATH")]
    pub dot: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum CfCmd {
    /// Expand a rational r/s, or a surd given as p,q,d meaning (p+√d)/q.
    Expand {
        #[arg(allow_hyphen_values = true)]
        x: String,
        /// Negative expansion only.
        #[arg(long)]
        neg: bool,
        /// Regular expansion only.
        #[arg(long, conflicts_with = "neg")]
        reg: bool,
        /// Read X as a quadratic surd p,q,d.
        #[arg(long, conflicts_with = "reg")]
        surd: bool,
    },
    /// Convert [[c1,...]] to [a1,...] and back.
    Convert {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Evaluate [[c1,...]], [a1,...] or a periodic word [[prefix;period]].
    Eval {
        #[arg(allow_hyphen_values = true)]
        word: String,
        /// Also list the convergents.
        #[arg(long)]
        convergents: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum MatCmd {
    /// M(c1,...,cn).
    Word {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// M+(a1,...,a2m).
    Plusword {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Evaluate a generator word such as "R^2 S L^-1".
    Genword { word: String },
    /// Minimal positive word presenting the matrix in PSL(2,Z).
    Minpres {
        #[arg(allow_hyphen_values = true)]
        matrix: String,
    },
    /// Conjugacy class of a hyperbolic matrix.
    Conjclass {
        #[arg(allow_hyphen_values = true)]
        matrix: String,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Membership in the cone a >= b >= d > 0, a >= c >= d > 0.
    Gamma {
        #[arg(allow_hyphen_values = true)]
        matrix: String,
    },
    /// Dissection quiddity built from the minimal words of A and its inverse.
    Matdissect {
        #[arg(allow_hyphen_values = true)]
        matrix: String,
    },
    /// The triangulated polygon of [[a,-b],[c,-d]].
    Tmatrix {
        #[arg(allow_hyphen_values = true)]
        matrix: String,
        #[command(flatten)]
        out: Drawing,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Rational,
    Surd,
    Both,
}

#[derive(Subcommand, Debug)]
pub enum QuiddityCmd {
    /// Classify M(c) as -Id, +Id or neither.
    Check {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Apply surgeries until none applies.
    Reduce {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Triangulation with the given quiddity.
    Reconstruct {
        #[arg(allow_hyphen_values = true)]
        word: String,
        #[command(flatten)]
        out: Drawing,
    },
}

#[derive(Subcommand, Debug)]
pub enum DissectCmd {
    /// All 3d-dissections (or triangulations) of an n-gon.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        triangulations: bool,
    },
    /// Validate a JSON dissection and report its cells and sign.
    Validate { dissection: String },
    /// Quiddity of a JSON dissection.
    Quiddity { dissection: String },
}

#[derive(Subcommand, Debug)]
pub enum WalkCmd {
    /// Walk generated by a solution word.
    FromWord {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Classify a JSON walk.
    Classify { walk: String },
    /// Period of a JSON walk.
    Quiddity { walk: String },
}

#[derive(Subcommand, Debug)]
pub enum FareyCmd {
    /// The triangulated polygon of r/s > 1.
    Trs {
        x: String,
        #[command(flatten)]
        out: Drawing,
    },
    /// Farey polygon spanned by the descents to the given positive rationals.
    Polygon {
        targets: String,
        #[command(flatten)]
        out: Drawing,
    },
    /// Triangulate a Farey polygon given by its vertices from 1/0 to 0/1.
    Triangulate {
        #[arg(allow_hyphen_values = true)]
        vertices: String,
        #[command(flatten)]
        out: Drawing,
    },
}

#[derive(Subcommand, Debug)]
pub enum PtolemyCmd {
    /// Continuant labeling of a solution word.
    Table {
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Check the Ptolemy relations of the labeling of a word.
    Verify {
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Determinants of the continuant matrices against the trace.
    Pfaffian {
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match commands::run(&cli.command) {
        Ok(report) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report.json).expect("JSON values serialize"));
            } else {
                println!("{}", report.text);
            }
            if report.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("farey: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
