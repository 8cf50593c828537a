use std::fs::File;
use std::io::{BufReader, Write as _};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use linlay::constructions::{
    hexgrid_strict_queue_layout, product_queue_layout, product_stack_layout, search_layout,
    star_queue_layout, SearchOutcome, DEFAULT_SEARCH_SEED,
};
use linlay::exact::{queue_number_exact, stack_number_exact, ExactOptions, DEFAULT_MAX_VERTICES};
use linlay::graph::{
    cartesian_product, edge, is_bipartite, make_complete, make_cycle, make_hex_grid, make_path,
    make_star, read_graph, strong_product, write_graph, Bipartiteness, Edge, Graph,
};
use linlay::hex::{find_monochromatic_path, read_colouring};
use linlay::layout::{
    is_dispersable, is_strict_queue, read_layout, verify_layout, write_layout, LayoutKind,
    LinearLayout,
};
use linlay::refuter::{refute, required_parameters, write_trace, RefutationOutcome};
use linlay::render::render;
use linlay::Error;

#[derive(Parser)]
#[command(name = "linlay", version, about = "Stack and queue layouts of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph from a named family
    Gen {
        #[command(subcommand)]
        family: GenFamily,
    },
    /// Combine two graphs into a product
    Product {
        #[arg(long, value_enum)]
        op: ProductOp,
        g1: PathBuf,
        g2: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Build a layout by construction or randomized search
    Layout {
        #[command(subcommand)]
        which: LayoutCmd,
    },
    /// Check a layout against a graph; exit 1 on violations
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        layout: PathBuf,
        /// also require strictness (queue layouts)
        #[arg(long)]
        strict: bool,
        /// also require a proper edge colouring (stack layouts)
        #[arg(long)]
        dispersable: bool,
    },
    /// Monochromatic crossing path for a grid colouring
    Hexpath {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        colouring: PathBuf,
    },
    /// Run the refutation pipeline against a claimed s-stack layout
    Refute {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        layout: PathBuf,
        #[arg(long)]
        s: usize,
        /// write the stage-by-stage trace here
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Exhaustive stack or queue number for small graphs
    Exact {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, default_value_t = DEFAULT_MAX_VERTICES)]
        max_vertices: usize,
        /// write the witness layout here
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Exact lower-bound-scale parameters for a given s
    Params {
        #[arg(long)]
        s: usize,
    },
    /// Arc-diagram SVG of a layout
    Render {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        layout: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        /// edges to emphasize, as u:v (certificate mode skips validation)
        #[arg(long)]
        highlight: Vec<String>,
    },
}

#[derive(Subcommand)]
enum GenFamily {
    /// Triangulated n x n grid
    Hexgrid {
        #[arg(long)]
        n: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Star with b leaves
    Star {
        #[arg(long)]
        b: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
    Path {
        #[arg(long)]
        n: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
    Cycle {
        #[arg(long)]
        n: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
    Complete {
        #[arg(long)]
        n: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ProductOp {
    Cartesian,
    Strong,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Stack,
    Queue,
}

impl From<KindArg> for LayoutKind {
    fn from(k: KindArg) -> LayoutKind {
        match k {
            KindArg::Stack => LayoutKind::Stack,
            KindArg::Queue => LayoutKind::Queue,
        }
    }
}

#[derive(Subcommand)]
enum LayoutCmd {
    /// Queue layout of S_b x H_n on at most 4 queues
    Fourqueue(FourQueueArgs),
    /// Strict queue layout of H_n on at most 3 queues
    Strictqueue {
        #[arg(long)]
        n: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// 1-queue layout of S_b
    Starqueue {
        #[arg(long)]
        b: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Stack layout of a product with a bipartite second factor
    Productstack {
        /// first factor graph
        g1: PathBuf,
        /// stack layout of the first factor
        l1: PathBuf,
        /// second factor graph (must be bipartite)
        g2: PathBuf,
        /// dispersable stack layout of the second factor
        l2: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Randomized search for a layout within a page budget
    Search {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        pages: usize,
        #[arg(long, default_value_t = 1000)]
        budget: u64,
        #[arg(long, default_value_t = DEFAULT_SEARCH_SEED)]
        seed: u64,
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Args)]
struct FourQueueArgs {
    #[arg(long)]
    b: usize,
    #[arg(long)]
    n: usize,
    #[arg(short, long)]
    output: PathBuf,
}

fn load_graph(path: &Path) -> Result<Graph, Error> {
    read_graph(BufReader::new(File::open(path)?))
}

fn load_layout(path: &Path) -> Result<LinearLayout, Error> {
    read_layout(BufReader::new(File::open(path)?))
}

fn save(path: &Path, text: &str) -> Result<(), Error> {
    let mut f = File::create(path)?;
    f.write_all(text.as_bytes())?;
    Ok(())
}

fn parse_edge(spec: &str) -> Result<Edge, Error> {
    let parts: Vec<&str> = spec.split(':').collect();
    let err = || Error::Precondition(format!("highlight edge must be u:v, got `{spec}`"));
    if parts.len() != 2 {
        return Err(err());
    }
    let u: usize = parts[0].parse().map_err(|_| err())?;
    let v: usize = parts[1].parse().map_err(|_| err())?;
    Ok(edge(u, v))
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Gen { family } => {
            let (g, output) = match family {
                GenFamily::Hexgrid { n, output } => (make_hex_grid(n)?, output),
                GenFamily::Star { b, output } => (make_star(b), output),
                GenFamily::Path { n, output } => (make_path(n), output),
                GenFamily::Cycle { n, output } => (make_cycle(n)?, output),
                GenFamily::Complete { n, output } => (make_complete(n), output),
            };
            save(&output, &write_graph(&g))?;
            println!("{} vertices, {} edges", g.vertex_count(), g.edge_count());
            Ok(0)
        }
        Command::Product { op, g1, g2, output } => {
            let a = load_graph(&g1)?;
            let b = load_graph(&g2)?;
            let g = match op {
                ProductOp::Cartesian => cartesian_product(&a, &b)?,
                ProductOp::Strong => strong_product(&a, &b)?,
            };
            save(&output, &write_graph(&g))?;
            println!("{} vertices, {} edges", g.vertex_count(), g.edge_count());
            Ok(0)
        }
        Command::Layout { which } => match which {
            LayoutCmd::Fourqueue(args) => {
                let star = make_star(args.b);
                let l1 = star_queue_layout(args.b)?;
                let grid = make_hex_grid(args.n)?;
                let l2 = hexgrid_strict_queue_layout(args.n)?;
                let layout = product_queue_layout(&star, &l1, &grid, &l2)?;
                save(&args.output, &write_layout(&layout))?;
                println!("queue layout, {} queues", layout.page_count);
                Ok(0)
            }
            LayoutCmd::Strictqueue { n, output } => {
                let layout = hexgrid_strict_queue_layout(n)?;
                save(&output, &write_layout(&layout))?;
                println!("strict queue layout, {} queues", layout.page_count);
                Ok(0)
            }
            LayoutCmd::Starqueue { b, output } => {
                let layout = star_queue_layout(b)?;
                save(&output, &write_layout(&layout))?;
                println!("queue layout, {} queue", layout.page_count);
                Ok(0)
            }
            LayoutCmd::Productstack { g1, l1, g2, l2, output } => {
                let a = load_graph(&g1)?;
                let la = load_layout(&l1)?;
                let b = load_graph(&g2)?;
                let lb = load_layout(&l2)?;
                let bipartition = match is_bipartite(&b) {
                    Bipartiteness::Bipartite { side } => side,
                    Bipartiteness::OddCycle { cycle } => {
                        return Err(Error::Precondition(format!(
                            "second factor has an odd cycle through {:?}",
                            cycle
                        )))
                    }
                };
                let layout = product_stack_layout(&a, &la, &b, &lb, &bipartition)?;
                save(&output, &write_layout(&layout))?;
                println!("stack layout, {} stacks", layout.page_count);
                Ok(0)
            }
            LayoutCmd::Search { graph, kind, pages, budget, seed, output } => {
                let g = load_graph(&graph)?;
                match search_layout(&g, kind.into(), pages, budget, seed)? {
                    SearchOutcome::Found(layout) => {
                        save(&output, &write_layout(&layout))?;
                        println!(
                            "found, {} {}",
                            layout.page_count,
                            page_noun(layout.kind, layout.page_count)
                        );
                        Ok(0)
                    }
                    SearchOutcome::NotFound { restarts } => {
                        println!("not found after {restarts} restarts (inconclusive)");
                        Ok(1)
                    }
                }
            }
        },
        Command::Verify { graph, layout, strict, dispersable } => {
            let g = load_graph(&graph)?;
            let l = load_layout(&layout)?;
            let certs = verify_layout(&g, &l)?;
            if !certs.is_empty() {
                for c in &certs {
                    println!(
                        "violation: ({}, {}) and ({}, {}) {} on page {}",
                        c.first.0,
                        c.first.1,
                        c.second.0,
                        c.second.1,
                        match c.kind {
                            LayoutKind::Stack => "cross",
                            LayoutKind::Queue => "nest",
                        },
                        c.page
                    );
                }
                println!("invalid, {} violation(s)", certs.len());
                return Ok(1);
            }
            if strict {
                if l.kind != LayoutKind::Queue {
                    return Err(Error::Precondition("--strict applies to queue layouts".into()));
                }
                if let Some((u, v, w)) = is_strict_queue(&g, &l)? {
                    println!("not strict: vertex {u} sends edges to {v} and {w} on one queue");
                    return Ok(1);
                }
            }
            if dispersable {
                if l.kind != LayoutKind::Stack {
                    return Err(Error::Precondition(
                        "--dispersable applies to stack layouts".into(),
                    ));
                }
                if let Some((e, f)) = is_dispersable(&g, &l)? {
                    println!(
                        "not dispersable: ({}, {}) and ({}, {}) share a page and an endpoint",
                        e.0, e.1, f.0, f.1
                    );
                    return Ok(1);
                }
            }
            println!("valid, {} {}", l.page_count, page_noun(l.kind, l.page_count));
            Ok(0)
        }
        Command::Hexpath { n, colouring } => {
            let c = read_colouring(n, BufReader::new(File::open(&colouring)?))?;
            let (path, colour) = find_monochromatic_path(n, &c);
            print!("path {}", colour.as_str());
            for v in &path.vertices {
                print!(" {v}");
            }
            println!();
            Ok(0)
        }
        Command::Refute { graph, layout, s, trace } => {
            let g = load_graph(&graph)?;
            let l = load_layout(&layout)?;
            let (outcome, tr) = refute(&g, &l, s)?;
            if let Some(path) = trace {
                save(&path, &write_trace(&tr, &outcome))?;
            }
            match outcome {
                RefutationOutcome::Certificate(c) => {
                    println!(
                        "certificate: ({}, {}) and ({}, {}) cross on page {}",
                        c.first.0, c.first.1, c.second.0, c.second.1, c.page
                    );
                    Ok(1)
                }
                RefutationOutcome::Report(r) => {
                    println!(
                        "no violation found: a={} c={} d={} path={} ({} vertices) family={}",
                        r.a,
                        r.c,
                        r.d,
                        r.path_colour.as_str(),
                        r.path_len,
                        r.family_size
                    );
                    if let Some(p) = &r.required {
                        println!("guaranteed refutation at this s needs n={} b={}", p.n, p.b);
                    }
                    Ok(0)
                }
            }
        }
        Command::Exact { graph, kind, max_vertices, output } => {
            let g = load_graph(&graph)?;
            let opts = ExactOptions { max_vertices };
            let result = match kind {
                KindArg::Stack => stack_number_exact(&g, opts)?,
                KindArg::Queue => queue_number_exact(&g, opts)?,
            };
            println!(
                "{} {}, {} orders examined",
                result.pages,
                page_noun(kind.into(), result.pages),
                result.orders_examined
            );
            if let Some(path) = output {
                save(&path, &write_layout(&result.witness))?;
            }
            Ok(0)
        }
        Command::Params { s } => {
            let p = required_parameters(s)?;
            println!("s {}", p.s);
            println!("n {}", p.n);
            println!("b {}", p.b);
            println!("a_min {}", p.a_min);
            println!("c_min {}", p.c_min);
            println!("d_min {}", p.d_min);
            println!("family {}", p.family_size);
            Ok(0)
        }
        Command::Render { graph, layout, output, highlight } => {
            let g = load_graph(&graph)?;
            let l = load_layout(&layout)?;
            let highlight: Vec<Edge> = highlight
                .iter()
                .map(|s| parse_edge(s))
                .collect::<Result<_, _>>()?;
            let svg = render(&g, &l, &highlight)?;
            save(&output, &svg)?;
            println!("wrote {}", output.display());
            Ok(0)
        }
    }
}

fn page_noun(kind: LayoutKind, count: usize) -> &'static str {
    match (kind, count) {
        (LayoutKind::Stack, 1) => "stack",
        (LayoutKind::Stack, _) => "stacks",
        (LayoutKind::Queue, 1) => "queue",
        (LayoutKind::Queue, _) => "queues",
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
