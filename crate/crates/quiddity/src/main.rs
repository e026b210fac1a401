use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use quiddity::json::{
    CertificateJson, DissectionJson, ElementReport, EnumerationReport, FareyReport, FriezeJson, VerifyReport,
};
use quiddity::{budget, parse_matrix, parse_word, render};
use quiddity_core::dissection::{dissections_with_quiddity, Dissection};
use quiddity_core::enumeration::{
    brute_force_enumerate, generative_enumerate, orbit_count, Budget, Problem, SolutionSet, Symmetry,
};
use quiddity_core::psl2::{conjecture_probe, element_dissection, element_quiddity};
use quiddity_core::sturm::{
    check_glide, check_tame, default_rows, farey_quiddity, frieze, is_totally_positive, rotation_index,
};
use quiddity_core::{classify, reduce, rotundus, Error, Mat2, SolutionClass, Word};

#[derive(Parser)]
#[command(
    name = "quiddity",
    version,
    about = "Solutions of M(a_1,...,a_n) = ±Id and trace-zero words, their dissections, friezes and indices"
)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Size ceiling for every exhaustive search (overrides QUIDDITY_BUDGET).
    #[arg(long, global = true)]
    budget: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Engine {
    Brute,
    Gen,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Orbits {
    None,
    Rotation,
    Dihedral,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Render {
    Json,
    Dot,
    Svg,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a word and check the sum, entry-bound and index formulas.
    Verify {
        #[arg(value_parser = parse_word)]
        word: Word,
    },
    /// List or count all solutions of one length.
    Enumerate {
        /// 1: M = Id, 2: M = -Id, 3: trace zero.
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        problem: u8,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        count: bool,
        #[arg(long, value_enum, default_value_t = Engine::Brute)]
        engine: Engine,
        #[arg(long, value_enum, default_value_t = Orbits::None)]
        orbits: Orbits,
    },
    /// Print the surgery certificate reducing a solution to a base word.
    Reduce {
        #[arg(value_parser = parse_word)]
        word: Word,
    },
    /// Build the 3d-dissection of a solution.
    Dissect {
        #[arg(value_parser = parse_word)]
        word: Word,
        #[arg(long, value_enum)]
        render: Option<Render>,
        /// Every dissection with this quiddity, not just the one from the certificate.
        #[arg(long)]
        all: bool,
    },
    /// Print the frieze of a solution with tameness and glide checks.
    Frieze {
        #[arg(value_parser = parse_word)]
        word: Word,
        #[arg(long)]
        rows: Option<usize>,
        /// Entries shown per row (default: two periods).
        #[arg(long)]
        width: Option<usize>,
        /// Column of the first displayed entry.
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        shift: isize,
    },
    /// Reduced word, quiddity, index and dissection of a matrix `a,b,c,d` of determinant 1.
    Decompose {
        #[arg(value_parser = parse_matrix, allow_hyphen_values = true)]
        matrix: Mat2,
    },
    /// Quiddity of the Farey triangulation of order N.
    Farey { order: u64 },
    /// Count dissections for every element quiddity up to a length bound.
    Probe {
        #[arg(long)]
        bound: usize,
    },
}

enum Failure {
    /// The answer is negative (not a solution, engines disagree); payload already printed.
    Negative,
    Usage(String),
    Budget(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Budget { .. } => Failure::Budget(e.to_string()),
            Error::Determinant | Error::EmptyWord | Error::NonPositiveEntry { .. } | Error::TooShort { .. } => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Domain(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn emit<T: Serialize>(format: Format, doc: &T, text: impl FnOnce() -> String) {
    match format {
        Format::Json => println!("{}", serde_json::to_string(doc).expect("serializable")),
        Format::Text => print!("{}", text()),
    }
}

fn problem_number(p: Problem) -> u8 {
    match p {
        Problem::I => 1,
        Problem::II => 2,
        Problem::III => 3,
    }
}

fn verify(format: Format, w: &Word) -> Outcome {
    let (class, cert) = classify(w);
    let problem = Problem::from_solution_class(class);
    let n = w.len() as i64;
    let expected_sum = match (problem, &cert) {
        (Some(Problem::III), Some(c)) => Some(3 * n - 6 * c.r as i64 - 3),
        (Some(_), Some(c)) => Some(3 * n - 6 * c.r as i64 - 6),
        _ => None,
    };
    let entry_bound = problem.map(|p| p.entry_bound(w.len()));
    let report = VerifyReport {
        word: w.as_slice().to_vec(),
        class: format!("{class:?}"),
        trace: i128::try_from(&rotundus(w)).map_err(|_| Failure::Domain("trace too large".into()))?,
        s: cert.as_ref().map(|c| c.s),
        r: cert.as_ref().map(|c| c.r),
        sum: w.sum(),
        expected_sum,
        sum_ok: expected_sum.map(|e| e == w.sum() as i64),
        max_entry: w.max_entry(),
        entry_bound,
        entry_bound_ok: entry_bound.map(|b| w.max_entry() <= b),
        index_twice: rotation_index(w).ok().map(|h| h.twice),
    };
    emit(format, &report, || {
        let mut t = format!("word      {w}\nclass     {}\ntrace     {}\n", report.class, report.trace);
        if let (Some(s), Some(r)) = (report.s, report.r) {
            t += &format!("S = {s}, R = {r}\n");
        }
        if let Some(e) = report.expected_sum {
            let ok = if report.sum_ok == Some(true) { "ok" } else { "MISMATCH" };
            t += &format!("sum       {} (expected {e}, {ok})\n", report.sum);
        } else {
            t += &format!("sum       {}\n", report.sum);
        }
        if let Some(b) = report.entry_bound {
            let ok = if report.entry_bound_ok == Some(true) { "ok" } else { "EXCEEDED" };
            t += &format!("max entry {} (bound {b}, {ok})\n", report.max_entry);
        }
        if let Some(twice) = report.index_twice {
            let h = quiddity_core::sturm::HalfInteger::from_twice(twice);
            let note = if class == SolutionClass::ProblemIII { " (of the doubled word)" } else { "" };
            t += &format!("index     {h}{note}\n");
        }
        t
    });
    if class.is_solution() {
        Ok(())
    } else {
        Err(Failure::Negative)
    }
}

fn enumerate(
    format: Format,
    budget: &Budget,
    problem: u8,
    n: usize,
    count_only: bool,
    engine: Engine,
    orbits: Orbits,
) -> Outcome {
    let problem = [Problem::I, Problem::II, Problem::III][problem as usize - 1];
    let set: SolutionSet = match engine {
        Engine::Brute => brute_force_enumerate(problem, n, budget)?,
        Engine::Gen => generative_enumerate(problem, n, budget)?,
        Engine::Both => {
            let brute = brute_force_enumerate(problem, n, budget)?;
            let gen = generative_enumerate(problem, n, budget)?;
            if brute != gen {
                eprintln!("engines disagree: brute force {} words, generative {} words", brute.len(), gen.len());
                return Err(Failure::Negative);
            }
            brute
        }
    };
    let (symmetry, orbit_name) = match orbits {
        Orbits::None => (None, "none"),
        Orbits::Rotation => (Some(Symmetry::Rotation), "rotation"),
        Orbits::Dihedral => (Some(Symmetry::Dihedral), "dihedral"),
    };
    let words: Vec<Word> = match symmetry {
        None => set.words.clone(),
        Some(sym) => {
            let reps: std::collections::BTreeSet<Word> = set
                .words
                .iter()
                .map(|w| match sym {
                    Symmetry::Rotation => w.canonical_form(),
                    Symmetry::Dihedral => w.dihedral_canonical_form(),
                })
                .collect();
            debug_assert_eq!(reps.len(), orbit_count(&set.words, sym));
            reps.into_iter().collect()
        }
    };
    let report = EnumerationReport {
        problem: problem_number(problem),
        n,
        engine: match engine {
            Engine::Brute => "brute",
            Engine::Gen => "gen",
            Engine::Both => "both",
        }
        .into(),
        orbits: orbit_name.into(),
        count: words.len(),
        words: (!count_only).then(|| words.iter().map(|w| w.as_slice().to_vec()).collect()),
    };
    emit(format, &report, || {
        if count_only {
            format!("{}\n", report.count)
        } else {
            words.iter().map(|w| format!("{w}\n")).collect()
        }
    });
    Ok(())
}

fn reduce_cmd(format: Format, w: &Word) -> Outcome {
    let cert = match reduce(w) {
        Ok(c) => c,
        Err(Error::NotASolution { .. }) => {
            eprintln!("{w} is not a solution");
            return Err(Failure::Negative);
        }
        Err(e) => return Err(e.into()),
    };
    let doc = CertificateJson::new(w, &cert);
    emit(format, &doc, || {
        let mut t = format!("word {w}\nbase {}\nS = {}, R = {}\n", cert.base, cert.s, cert.r);
        for step in &doc.steps {
            match step.split {
                Some((a, b)) => t += &format!("type 2 at {} split ({a},{b}) shift {}\n", step.position, step.shift),
                None => t += &format!("type 1 at {} shift {}\n", step.position, step.shift),
            }
        }
        t
    });
    Ok(())
}

fn dissection_text(d: &Dissection) -> String {
    let profile = d.profile();
    let diags: Vec<String> = d.diagonals().iter().map(|(i, j)| format!("{{{i},{j}}}")).collect();
    format!("{}-gon, faces {:?}, diagonals {}\n", d.n(), profile.face_sizes, diags.join(" "))
}

fn show_dissections(format: Format, render: Option<Render>, ds: &[Dissection]) {
    match render {
        Some(Render::Dot) => ds.iter().for_each(|d| print!("{}", render::dot(d))),
        Some(Render::Svg) => ds.iter().for_each(|d| print!("{}", render::svg(d))),
        Some(Render::Json) => {
            let docs: Vec<DissectionJson> = ds.iter().map(DissectionJson::new).collect();
            emit(Format::Json, &docs, String::new)
        }
        None => {
            let docs: Vec<DissectionJson> = ds.iter().map(DissectionJson::new).collect();
            emit(format, &docs, || ds.iter().map(dissection_text).collect())
        }
    }
}

fn dissect(format: Format, budget: &Budget, w: &Word, render: Option<Render>, all: bool) -> Outcome {
    let (class, cert) = classify(w);
    let Some(cert) = cert.filter(|_| class.is_solution()) else {
        eprintln!("{w} is not a solution");
        return Err(Failure::Negative);
    };
    if all {
        let target = if class == SolutionClass::ProblemIII { w.doubled() } else { w.clone() };
        let ds = dissections_with_quiddity(&target, budget)?;
        if render.is_none() && format == Format::Text {
            println!("{} dissections with quiddity {target}", ds.len());
        }
        show_dissections(format, render, &ds);
        return Ok(());
    }
    let d = if class == SolutionClass::ProblemIII {
        Dissection::build_symmetric(w, budget)?
    } else {
        Dissection::from_certificate(&cert)?
    };
    match (render, format) {
        (None, Format::Json) | (Some(Render::Json), _) => emit(Format::Json, &DissectionJson::new(&d), String::new),
        _ => show_dissections(format, render, std::slice::from_ref(&d)),
    }
    Ok(())
}

fn frieze_cmd(format: Format, w: &Word, rows: Option<usize>, width: Option<usize>, shift: isize) -> Outcome {
    let rows = match (rows, default_rows(w)) {
        (_, Err(_)) => {
            eprintln!("{w} is neither a -Id nor a trace-zero solution");
            return Err(Failure::Negative);
        }
        (Some(r), Ok(_)) => r,
        (None, Ok(r)) => r,
    };
    let f = frieze(w, rows)?;
    let trace_zero = classify(w).0 == SolutionClass::ProblemIII;
    emit(format, &FriezeJson::new(&f), || {
        let mut t = render::frieze_text(&f, width.unwrap_or(2 * w.len()), shift);
        if rows >= 3 {
            t += &format!("tame: {}\n", check_tame(&f));
        }
        if trace_zero && rows == 2 * w.len() - 1 {
            t += &format!("glide: {}\n", check_glide(&f));
        }
        t
    });
    Ok(())
}

fn decompose(format: Format, budget: &Budget, a: &Mat2) -> Outcome {
    if a.det() != 1.into() {
        return Err(Failure::Usage(format!("{a} has determinant {}, not 1", a.det())));
    }
    let q = element_quiddity(a)?;
    let index = rotation_index(&q.combined)?;
    let d = element_dissection(a)?;
    let found = if q.combined.len() <= budget.dissections {
        Some(dissections_with_quiddity(&q.combined, budget)?.len())
    } else {
        None
    };
    let report = ElementReport::new(a, &q.left, &q.combined, index.twice, found);
    emit(format, &report, || {
        let mut t = format!(
            "element   {a}\nreduced   {}\ninverse   {}\nquiddity  {} (A-word then inverse word, M = {}Id)\nindex     {index}\n",
            q.left,
            q.right,
            q.combined,
            if q.sign_defect { "-" } else { "" }
        );
        t += &format!("dissection {}", dissection_text(&d));
        if let Some(k) = found {
            t += &format!("dissections with this quiddity: {k}\n");
        }
        t
    });
    Ok(())
}

fn farey(format: Format, order: u64) -> Outcome {
    if order < 2 {
        return Err(Failure::Usage(format!("order {order} gives fewer than three vertices")));
    }
    let w = farey_quiddity(order)?;
    let class = classify(&w).0;
    let report = FareyReport {
        order,
        n: w.len(),
        sum: w.sum(),
        class: format!("{class:?}"),
        totally_positive: is_totally_positive(&w)?,
        word: w.as_slice().to_vec(),
    };
    emit(format, &report, || {
        format!(
            "{w}\nn = {}, sum = {} (3n-6 = {}), class {}, totally positive: {}\n",
            report.n,
            report.sum,
            3 * report.n - 6,
            report.class,
            report.totally_positive
        )
    });
    Ok(())
}

fn probe(format: Format, budget: &Budget, bound: usize) -> Outcome {
    let report = conjecture_probe(bound, budget)?;
    let docs: Vec<ElementReport> = report.entries.iter().map(ElementReport::from_probe).collect();
    emit(format, &docs, || {
        let mut t = String::new();
        for e in &report.entries {
            t += &format!(
                "{}  reduced {}  quiddity {}  index {}  dissections {}\n",
                e.element, e.reduced, e.quiddity, e.index, e.dissections_found
            );
        }
        let odd = report.multiple().count();
        t += &format!(
            "{} elements with quiddity length <= {bound}; {odd} not realized by exactly one dissection\n",
            report.entries.len()
        );
        t
    });
    Ok(())
}

fn run(cli: Cli) -> Outcome {
    let budget = budget(cli.budget).map_err(Failure::Usage)?;
    let f = cli.format;
    match cli.command {
        Command::Verify { word } => verify(f, &word),
        Command::Enumerate { problem, n, count, engine, orbits } => {
            enumerate(f, &budget, problem, n, count, engine, orbits)
        }
        Command::Reduce { word } => reduce_cmd(f, &word),
        Command::Dissect { word, render, all } => dissect(f, &budget, &word, render, all),
        Command::Frieze { word, rows, width, shift } => frieze_cmd(f, &word, rows, width, shift),
        Command::Decompose { matrix } => decompose(f, &budget, &matrix),
        Command::Farey { order } => farey(f, order),
        Command::Probe { bound } => probe(f, &budget, bound),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Negative) => ExitCode::from(1),
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
