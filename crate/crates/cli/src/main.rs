//! `hgslab`: command-line front end for the structure library.
//!
//! Exit codes: 0 success, 1 usage error, 2 computation error, 3 failed check.

mod commands;
mod input;
mod report;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hgslab::GroupSpec;

#[derive(Parser, Debug)]
#[command(name = "hgslab", version, about = "Hopf-Galois structures, ρ-conjugation and skew braces on finite groups")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Report wall-clock time (omitted from JSON unless given).
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Describe a group: elements, orders and Cayley table.
    Group(GroupArgs),
    /// Enumerate structures and their ρ-orbits.
    #[command(subcommand)]
    Hgs(HgsCommand),
    /// Skew brace views of a structure.
    #[command(subcommand)]
    Brace(BraceCommand),
    /// Build structures from fixed-point-free pairs, abelian maps or induction.
    #[command(subcommand)]
    Construct(ConstructCommand),
    /// G-stable subgroups of a structure and the subgroups of G they realise.
    Correspondence(CorrespondenceArgs),
    /// Run the named regression checks of the worked examples.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
pub struct GroupArgs {
    /// Group spec, e.g. `cyclic:6`, `dihedral:4`, `metacyclic:7:3:2`.
    #[arg(long, value_parser = input::parse_spec)]
    pub group: GroupSpec,
}

#[derive(Args, Debug)]
pub struct InventoryArgs {
    #[arg(long, value_parser = input::parse_spec)]
    pub group: GroupSpec,
    /// Restrict to structures of this isomorphism type.
    #[arg(long = "type", value_parser = input::parse_spec)]
    pub type_filter: Option<GroupSpec>,
}

#[derive(Subcommand, Debug)]
pub enum HgsCommand {
    /// List every G-stable regular subgroup of Perm(G).
    Enumerate(InventoryArgs),
    /// Partition the inventory into ρ-conjugacy classes.
    RhoOrbits(InventoryArgs),
}

#[derive(Args, Debug)]
pub struct StructureArgs {
    #[command(flatten)]
    pub inventory: InventoryArgs,
    /// A hash prefix, `i:<index>`, `o:<orbit>` (the orbit's least member), or a
    /// JSON list of generator image lists.
    #[arg(long)]
    pub structure: String,
}

#[derive(Subcommand, Debug)]
pub enum BraceCommand {
    /// Print the ⋆ and ∘ tables.
    Extract(StructureArgs),
    /// Check the brace axioms, two-sidedness and the inverse identity.
    Check(StructureArgs),
    /// Brace automorphisms.
    Aut(StructureArgs),
    /// The subgroup G′ of elements whose inner automorphism preserves ⋆.
    Gprime(StructureArgs),
    /// The set-theoretic Yang-Baxter solution of the brace.
    Ybe(StructureArgs),
}

#[derive(Subcommand, Debug)]
pub enum ConstructCommand {
    /// Structure from a fixed-point-free pair f1, f2 : G → M.
    Fpf(FpfArgs),
    /// Structures N_ψ from endomorphisms with abelian image.
    AbelianMaps(AbelianMapsArgs),
    /// Structures induced from a subgroup T with a normal complement.
    Induced(InducedArgs),
}

#[derive(Args, Debug)]
pub struct FpfArgs {
    #[arg(long, value_parser = input::parse_spec)]
    pub group: GroupSpec,
    /// The group M.
    #[arg(long, value_parser = input::parse_spec)]
    pub target: GroupSpec,
    /// Images in M of the generators of G, comma separated (names or indices).
    #[arg(long)]
    pub f1: String,
    #[arg(long)]
    pub f2: String,
}

#[derive(Args, Debug)]
pub struct AbelianMapsArgs {
    #[arg(long, value_parser = input::parse_spec)]
    pub group: GroupSpec,
    /// Also partition the structures into ρ-orbits.
    #[arg(long)]
    pub orbits: bool,
}

#[derive(Args, Debug)]
pub struct InducedArgs {
    #[arg(long, value_parser = input::parse_spec)]
    pub group: GroupSpec,
    /// Generators of T, comma separated (names or indices).
    #[arg(long, conflicts_with = "search", required_unless_present = "search")]
    pub t: Option<String>,
    /// Try every proper nontrivial subgroup with a normal complement.
    #[arg(long)]
    pub search: bool,
}

#[derive(Args, Debug)]
pub struct CorrespondenceArgs {
    #[command(flatten)]
    pub structure: StructureArgs,
    /// Also print the pairing with the lattice of the ρ-conjugate by this element.
    #[arg(long)]
    pub transport: Option<String>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Only checks whose id starts with this prefix (or whose family matches).
    #[arg(long)]
    pub only: Option<String>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Err(e) = input::configure_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(1);
    }
    let echo = std::env::args().skip(1).collect::<Vec<_>>().join(" ");
    match commands::run(&cli, &echo) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
