use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use sigpet::clustering::cluster_report;
use sigpet::coloring::{chromatic_numbers, count_colorations};
use sigpet::frustration::frustration_report;
use sigpet::graph::{edges_of, vertices_of};
use sigpet::six::{classify_six, minimal_representative, petersen_negative_circles};
use sigpet::{aut_signed, coset_system, swaut, Petersen, SignedGraph};
use sigpet_census::io::{load_signed_graph, parse_mask};
use sigpet_census::tables::census_table;
use sigpet_census::{run_census, verify_all, CensusError, Format, TableId};

#[derive(Parser)]
#[command(
    name = "sigpet",
    version,
    about = "Signed Petersen graph census and signed-graph tools"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify all 2^15 Petersen signatures and tally each class
    Census {
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Print one table: T1, T2, T3, T4_orders, T5, T8, T9, T10 or census
    Table {
        id: String,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Switching class and frustration of a signature
    Classify(Input),
    /// Aut and SwAut of a Petersen signature
    Group {
        #[arg(long)]
        mask: String,
        /// Also list a coset representative system of Aut in SwAut
        #[arg(long)]
        coset_table: bool,
    },
    /// Count proper colorations with colors 0, ±1, .., ±k
    Color {
        #[arg(long)]
        mask: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        zero_free: bool,
    },
    /// Clusterability, cluster number and inclusterability index
    Cluster(Input),
    /// Recompute every table and compare with the expected values
    Verify,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// Petersen sign mask in hex, bit i set when edge i is negative
    #[arg(long)]
    mask: Option<String>,
    /// Signed edge-list file
    #[arg(long)]
    file: Option<PathBuf>,
}

impl Input {
    fn load(&self) -> Result<SignedGraph, CensusError> {
        match (&self.mask, &self.file) {
            (Some(m), _) => parse_mask(m),
            (None, Some(f)) => load_signed_graph(f),
            (None, None) => unreachable!("clap requires one input"),
        }
    }
}

fn vertex_set_name(s: &SignedGraph, set: u32) -> String {
    if s.is_petersen() {
        Petersen::get().labeling().set_name(set)
    } else {
        let ids: Vec<String> = vertices_of(set).map(|v| v.to_string()).collect();
        format!("{{{}}}", ids.join(","))
    }
}

fn edge_names(s: &SignedGraph, edges: u128) -> String {
    let g = s.graph();
    let names: Vec<String> = edges_of(edges)
        .map(|e| {
            let (u, v) = g.edges()[e];
            if s.is_petersen() {
                let l = Petersen::get().labeling();
                format!("{}-{}", l.vertex_name(u), l.vertex_name(v))
            } else {
                format!("{u}-{v}")
            }
        })
        .collect();
    format!("{{{}}}", names.join(","))
}

fn classify(s: &SignedGraph) -> Result<(), CensusError> {
    let f = frustration_report(s)?;
    if let Ok(mask) = s.petersen_mask() {
        let (c5, c6) = petersen_negative_circles(mask);
        let (rep, zeta) = minimal_representative(s)?;
        println!("class   {}", classify_six(s)?);
        println!("mask    {mask:#06x}");
        println!("c5-     {c5}");
        println!("c6-     {c6}");
        println!(
            "minimal {:#06x} (switch {})",
            rep.petersen_mask()?,
            vertex_set_name(s, zeta.set())
        );
    } else {
        println!("class   not a Petersen signature");
    }
    println!("balanced {}", s.is_balanced());
    println!("l       {}", f.l);
    println!("l0      {} (delete {})", f.l0, vertex_set_name(s, f.witness_vertices));
    Ok(())
}

fn group(mask: &str, coset_table: bool) -> Result<(), CensusError> {
    let s = parse_mask(mask)?;
    let aut = aut_signed(&s)?;
    let sw = swaut(&s)?;
    println!("class  {}", classify_six(&s)?);
    println!("Aut    order {:>3}  {}", aut.order(), aut.label());
    println!("SwAut  order {:>3}  {}", sw.order(), sw.label());
    if coset_table {
        let cs = coset_system(&sw, &aut, s.graph())?;
        println!(
            "cosets {} (conjugation-closed: {})",
            cs.len(),
            cs.is_conjugation_closed()
        );
        for (i, r) in cs.representatives().iter().enumerate() {
            println!("  {i:>2}  {r}");
        }
    }
    Ok(())
}

fn color(mask: &str, k: usize, zero_free: bool) -> Result<(), CensusError> {
    let s = parse_mask(mask)?;
    let count = count_colorations(&s, k, zero_free)?;
    let (chi, chi_star) = chromatic_numbers(&s)?;
    let argument = if zero_free { 2 * k } else { 2 * k + 1 };
    println!(
        "colorations {count} (k = {k}, {}, argument {argument})",
        if zero_free { "zero-free" } else { "with 0" }
    );
    println!("chi  {chi}");
    println!("chi* {chi_star}");
    Ok(())
}

fn cluster(s: &SignedGraph) -> Result<(), CensusError> {
    let r = cluster_report(s)?;
    println!("clusterable {}", r.clusterable);
    match r.clun {
        Some(c) => println!("clun        {c}"),
        None => println!("clun        -"),
    }
    println!("Q           {} (delete {})", r.q, edge_names(s, r.deletion));
    if let Some(parts) = &r.clustering {
        let parts: Vec<String> = parts.iter().map(|&p| vertex_set_name(s, p)).collect();
        println!("clusters    {}", parts.join(" "));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode, CensusError> {
    match cli.command {
        Command::Census { format } => {
            let format: Format = format.parse()?;
            let report = run_census()?;
            print!("{}", census_table(&report).render(format));
            if format == Format::Text {
                println!();
                println!("l0 = l on every signature: {}", report.l0_mismatches == 0);
                println!("max inclusterability: {}", report.max_inclusterability);
            }
        }
        Command::Table { id, format } => {
            let id: TableId = id.parse()?;
            let format: Format = format.parse()?;
            print!("{}", sigpet_census::emit_table(id)?.render(format));
        }
        Command::Classify(input) => classify(&input.load()?)?,
        Command::Group { mask, coset_table } => group(&mask, coset_table)?,
        Command::Color { mask, k, zero_free } => color(&mask, k, zero_free)?,
        Command::Cluster(input) => cluster(&input.load()?)?,
        Command::Verify => {
            let report = verify_all()?;
            for note in &report.notes {
                println!("note: {note}");
            }
            for d in &report.diffs {
                println!("DIFF {d}");
            }
            println!("{} cells checked, {} differ", report.cells_checked, report.diffs.len());
            if !report.passed() {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("sigpet: {e}");
            ExitCode::from(2)
        }
    }
}
