use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use mckay_core::character::character_table;
use mckay_core::emit::{self, Artifact, Format};
use mckay_core::fixtures::fixtures;
use mckay_core::group::{build_group, conjugacy_classes};
use mckay_core::orbifold::{compare_spectrum_orbifold, orbifold_cohomology, sector_data};
use mckay_core::poly::Polynomial;
use mckay_core::quiver::{delete_trivial_vertex, mckay_graph, DynkinDiagram};
use mckay_core::roots::{coxeter_element, coxeter_exponents, positive_roots, CartanMatrix};
use mckay_core::spectrum::{analyze, Grading};
use mckay_core::verify::{run_verification, verify_all};
use mckay_core::{AdeType, Error, Result};

/// Exact McKay correspondence toolkit.
#[derive(Parser)]
#[command(name = "mckay", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct TypeArgs {
    /// A, D, E (with --rank) or E6, E7, E8; a rank suffix like A3 also works.
    #[arg(long)]
    family: String,
    #[arg(long)]
    rank: Option<u32>,
    /// json, tsv, dot or text.
    #[arg(long, default_value = "text")]
    format: Format,
}

impl TypeArgs {
    fn ade(&self) -> Result<AdeType> {
        AdeType::from_parts(&self.family, self.rank)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Matrix group, generators and conjugacy classes.
    Group(TypeArgs),
    /// Character table.
    Chartable(TypeArgs),
    /// McKay quiver (trivial vertex deleted) or, with --extended, the full McKay graph.
    Quiver {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        extended: bool,
    },
    /// Weights, Milnor number and spectrum of the Kleinian polynomial or of --poly.
    Spectrum {
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        rank: Option<u32>,
        /// A polynomial in x, y, z instead of a Kleinian type.
        #[arg(long, conflicts_with = "family")]
        poly: Option<String>,
        /// Report n(alpha) instead of n(alpha) - 1.
        #[arg(long)]
        raw_grading: bool,
        #[arg(long, default_value = "text")]
        format: Format,
    },
    /// Coxeter element, Coxeter number and exponents.
    Coxeter(TypeArgs),
    /// Twisted sectors, orbifold cohomology and the comparison with the spectrum.
    Orbifold(TypeArgs),
    /// Cross-check every module for one type, or for all types with --all.
    Verify {
        #[arg(long, required_unless_present = "all")]
        family: Option<String>,
        #[arg(long)]
        rank: Option<u32>,
        #[arg(long, conflicts_with = "family")]
        all: bool,
        #[arg(long, default_value_t = 10)]
        max_rank: u32,
        #[arg(long, default_value = "text")]
        format: Format,
    },
}

/// Output text and exit code.
fn run(cli: Cli) -> Result<(String, u8)> {
    let ok = |artifact: Artifact, format: Format| Ok((emit::emit(&artifact, format)?, 0));
    match cli.command {
        Command::Group(t) => {
            let g = build_group(t.ade()?)?;
            let classes = conjugacy_classes(&g)?;
            ok(Artifact::Group(emit::group_summary(&g, &classes)), t.format)
        }
        Command::Chartable(t) => {
            let ade = t.ade()?;
            let table = character_table(&build_group(ade)?)?;
            ok(Artifact::CharTable(emit::chartable_summary(ade, &table)), t.format)
        }
        Command::Quiver { ty, extended } => {
            let ade = ty.ade()?;
            let table = character_table(&build_group(ade)?)?;
            let graph = mckay_graph(&table)?;
            let (name, graph) = if extended {
                (format!("{ade}~"), graph)
            } else {
                (ade.to_string(), delete_trivial_vertex(&graph)?)
            };
            ok(Artifact::Graph(emit::graph_summary(&name, &graph)), ty.format)
        }
        Command::Spectrum {
            family,
            rank,
            poly,
            raw_grading,
            format,
        } => {
            let grading = if raw_grading { Grading::Raw } else { Grading::Shifted };
            let (ade, f) = match (family, poly) {
                (Some(fam), None) => {
                    let ade = AdeType::from_parts(&fam, rank)?;
                    (Some(ade), fixtures().equation(ade)?)
                }
                (None, Some(p)) => (None, Polynomial::parse(&p)?),
                _ => return Err(Error::Usage("spectrum needs --family or --poly".into())),
            };
            let report = analyze(&f, grading)?;
            ok(Artifact::Spectrum(emit::spectrum_summary(ade, &report, grading)), format)
        }
        Command::Coxeter(t) => {
            let ade = t.ade()?;
            let diagram = DynkinDiagram::reference(ade);
            let cox = coxeter_element(&diagram, None)?;
            let exps = coxeter_exponents(&cox)?;
            let roots = positive_roots(&CartanMatrix::from_diagram(&diagram)).len();
            ok(Artifact::Coxeter(emit::coxeter_summary(ade, &cox, &exps, roots)), t.format)
        }
        Command::Orbifold(t) => {
            let ade = t.ade()?;
            let g = build_group(ade)?;
            let classes = conjugacy_classes(&g)?;
            let sectors = sector_data(&g, &classes)?;
            let coh = orbifold_cohomology(&sectors)?;
            let sp = analyze(&fixtures().equation(ade)?, Grading::Shifted)?.spectrum;
            let report = compare_spectrum_orbifold(ade, &sp, &sectors);
            ok(Artifact::Orbifold(emit::orbifold_summary(ade, &sectors, coh, report)), t.format)
        }
        Command::Verify {
            family,
            rank,
            all,
            max_rank,
            format,
        } => {
            let results = if all {
                verify_all(max_rank)
            } else {
                let ade = AdeType::from_parts(family.as_deref().unwrap_or_default(), rank)?;
                vec![(ade, run_verification(ade))]
            };
            let aborted = results.iter().any(|(_, r)| r.is_err());
            let failed = results.iter().any(|(_, r)| r.as_ref().is_ok_and(|c| !c.passed()));
            let outcomes = results.into_iter().map(|(a, r)| emit::case_outcome(a, r)).collect();
            let text = emit::emit(&Artifact::Verification(outcomes), format)?;
            let code = if aborted {
                3
            } else if failed {
                1
            } else {
                0
            };
            Ok((text, code))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((text, code)) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(3);
            }
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("mckay: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
