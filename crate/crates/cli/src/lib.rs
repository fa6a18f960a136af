//! The `lettericity` command-line tool.
//!
//! Every subcommand reads an [`InstanceDocument`] (from a file or standard
//! input) and prints a [`ResultDocument`], except `gen`, which prints an
//! instance. Exit codes: 0 solution, 1 infeasible, 2 malformed input,
//! 3 size guard tripped, 4 internal error.

pub mod document;
pub mod generate;

use std::io::Read;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use indexmap::IndexMap;
use lettericity::decoder::{place_decoder, retrieve_decoder_detailed, DecoderOutcome, Rejection};
use lettericity::oracle::{brute_lettericity, brute_symmetric_lettericity, enumerate_decoders};
use lettericity::word_retrieval::is_generalized_solution;
use lettericity::{
    decode, retrieve_coloring, retrieve_word, symmetric_witness, verify_decoder, Alphabet,
    Coloring, Decoder, DecoderInstance, Error, Graph, IsomorphismMapping, Result, Word,
};

use document::{coloring_document, graph_document, InstanceDocument, Mode, ResultDocument, Status};
use generate::{generate, GenParams};

#[derive(Debug, Parser)]
#[command(
    name = "lettericity",
    version,
    about = "Letter-graph retrieval problems"
)]
pub struct Cli {
    /// Worker threads for the exhaustive oracles.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Input {
    /// Instance file; `-` or nothing reads standard input.
    pub input: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ModeArg {
    Word,
    Decoder,
    Coloring,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Word => Mode::Word,
            ModeArg::Decoder => Mode::Decoder,
            ModeArg::Coloring => Mode::Coloring,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build G(D, w) from a word and a decoder.
    Decode(Input),
    /// Find a word for a graph, coloring and decoder.
    RetrieveWord(Input),
    /// Find a decoder for a graph, coloring and word.
    RetrieveDecoder {
        #[command(flatten)]
        input: Input,
        /// List every solution decoder by exhaustive search (at most 4 letters).
        #[arg(long)]
        all: bool,
    },
    /// Find a coloring for a graph, decoder and word.
    RetrieveColoring(Input),
    /// Check whether a decoder solves a graph, coloring and word.
    Verify(Input),
    /// Neighborhood diversity with a symmetric realization.
    Nd(Input),
    /// Symmetric lettericity with a witness.
    SymLettericity {
        #[command(flatten)]
        input: Input,
        /// Use exhaustive search instead of neighborhood diversity.
        #[arg(long)]
        brute: bool,
    },
    /// Lettericity by exhaustive search, up to `--max-k` letters.
    Lettericity {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        max_k: usize,
    },
    /// Generate a random instance.
    Gen {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum)]
        mode: ModeArg,
        #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
        feasible: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Solution = 0,
    Infeasible = 1,
    Malformed = 2,
    SizeGuard = 3,
    Internal = 4,
}

/// What a run prints and how it exits.
#[derive(Debug, Clone, PartialEq)]
pub struct Execution {
    pub status: ExitStatus,
    pub stdout: String,
    pub stderr: Option<String>,
}

fn error_status(e: &Error) -> ExitStatus {
    match e {
        Error::SizeGuard { .. } => ExitStatus::SizeGuard,
        Error::Internal(_) => ExitStatus::Internal,
        _ => ExitStatus::Malformed,
    }
}

fn read_input(input: &Input, stdin: &mut dyn Read) -> Result<InstanceDocument> {
    let mut text = String::new();
    let read = match &input.input {
        Some(path) if path.as_os_str() != "-" => std::fs::read_to_string(path).map(|t| text = t),
        _ => stdin.read_to_string(&mut text).map(|_| ()),
    };
    read.map_err(|e| Error::Malformed(format!("cannot read input: {e}")))?;
    InstanceDocument::parse(&text)
}

pub fn execute(cli: &Cli, stdin: &mut dyn Read) -> Execution {
    if let Some(jobs) = cli.jobs {
        // fails harmlessly if a pool already exists in this process
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    let start = Instant::now();
    if let Command::Gen {
        seed,
        n,
        k,
        mode,
        feasible,
    } = cli.command
    {
        let params = GenParams {
            seed,
            n,
            k,
            mode: mode.into(),
            feasible,
        };
        return match generate(params) {
            Ok(doc) => Execution {
                status: ExitStatus::Solution,
                stdout: doc.to_json(),
                stderr: None,
            },
            Err(e) => failure(e, start),
        };
    }
    match dispatch(&cli.command, stdin) {
        Ok(mut doc) => {
            doc.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
            let status = match doc.status {
                Status::Solution => ExitStatus::Solution,
                Status::Infeasible => ExitStatus::Infeasible,
                Status::Error => ExitStatus::Internal,
            };
            Execution {
                status,
                stdout: doc.to_json(),
                stderr: None,
            }
        }
        Err(e) => failure(e, start),
    }
}

fn failure(e: Error, start: Instant) -> Execution {
    let mut doc = ResultDocument::new(Status::Error);
    doc.reason = Some(e.to_string());
    doc.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    Execution {
        status: error_status(&e),
        stdout: doc.to_json(),
        stderr: Some(format!("error: {e}")),
    }
}

fn dispatch(command: &Command, stdin: &mut dyn Read) -> Result<ResultDocument> {
    match command {
        Command::Decode(input) => cmd_decode(&read_input(input, stdin)?),
        Command::RetrieveWord(input) => cmd_retrieve_word(&read_input(input, stdin)?),
        Command::RetrieveDecoder { input, all } => {
            cmd_retrieve_decoder(&read_input(input, stdin)?, *all)
        }
        Command::RetrieveColoring(input) => cmd_retrieve_coloring(&read_input(input, stdin)?),
        Command::Verify(input) => cmd_verify(&read_input(input, stdin)?),
        Command::Nd(input) => cmd_symmetric(&read_input(input, stdin)?, false, true),
        Command::SymLettericity { input, brute } => {
            cmd_symmetric(&read_input(input, stdin)?, *brute, false)
        }
        Command::Lettericity { input, max_k } => {
            cmd_lettericity(&read_input(input, stdin)?, *max_k)
        }
        Command::Gen { .. } => unreachable!("handled before dispatch"),
    }
}

fn unverified(what: &str) -> Error {
    Error::Internal(format!("{what} failed re-verification"))
}

fn positions_document(g: &Graph, positions: &[usize]) -> IndexMap<String, usize> {
    g.vertices()
        .map(|v| (g.label(v).to_string(), positions[v] + 1))
        .collect()
}

fn permutation_document(g: &Graph, permutation: &[usize]) -> Vec<String> {
    permutation
        .iter()
        .map(|&v| g.label(v).to_string())
        .collect()
}

fn render_rejection(r: &Rejection, alphabet: &Alphabet) -> String {
    let name = |l| alphabet.name(l);
    match *r {
        Rejection::MixedColorGroup(a) => {
            format!(
                "color group `{}` is neither a clique nor an independent set",
                name(a)
            )
        }
        Rejection::SingleRuns(a, b) => format!(
            "one-sided pair `{}`/`{}` has a single run of each letter",
            name(a),
            name(b)
        ),
        Rejection::InfeasiblePair(a, b) => format!(
            "no orientation of one-sided pair `{}`/`{}` realizes its edges",
            name(a),
            name(b)
        ),
    }
}

/// `G ≅ G(D, w)` under `f`, with `χ(v) = w_{f(v)}`.
fn realizes(
    g: &Graph,
    coloring: &Coloring,
    decoder: &Decoder,
    word: &Word,
    f: &IsomorphismMapping,
) -> Result<bool> {
    let target = decode(decoder, word)?.graph;
    Ok(f.is_isomorphism(g, &target) && g.vertices().all(|v| coloring.letter(v) == word[f.map(v)]))
}

fn cmd_decode(doc: &InstanceDocument) -> Result<ResultDocument> {
    let inst = doc.load()?;
    let (word, decoder) = (inst.word()?, inst.decoder()?);
    let decoded = decode(decoder, word)?;
    let identity: Vec<usize> = decoded.graph.vertices().collect();
    if !is_generalized_solution(&decoded.graph, &decoded.coloring, decoder, &identity) {
        return Err(unverified("decoded graph"));
    }
    let mut out = ResultDocument::new(Status::Solution);
    out.coloring = Some(coloring_document(
        &decoded.graph,
        &inst.alphabet,
        &decoded.coloring,
    ));
    out.graph = Some(graph_document(&decoded.graph));
    out.alphabet = Some(inst.alphabet.names().to_vec());
    Ok(out)
}

fn cmd_retrieve_word(doc: &InstanceDocument) -> Result<ResultDocument> {
    let inst = doc.load()?;
    let (g, coloring, decoder) = (inst.graph()?, inst.coloring()?, inst.decoder()?);
    let Some(sol) = retrieve_word(g, coloring, decoder)? else {
        return Ok(ResultDocument::infeasible("the order digraph has a cycle"));
    };
    if !is_generalized_solution(g, coloring, decoder, &sol.permutation) {
        return Err(unverified("retrieved word"));
    }
    let mut out = ResultDocument::new(Status::Solution);
    out.word = Some(inst.alphabet.render_word(&sol.word));
    out.permutation = Some(permutation_document(g, &sol.permutation));
    out.isomorphism = Some(positions_document(g, &sol.positions()));
    Ok(out)
}

fn decoder_instance(doc: &InstanceDocument) -> Result<(DecoderInstance, Alphabet)> {
    let inst = doc.load()?;
    let di = DecoderInstance::new(
        inst.graph()?.clone(),
        inst.coloring()?.clone(),
        inst.word()?.clone(),
    )?;
    Ok((di, inst.alphabet))
}

fn cmd_retrieve_decoder(doc: &InstanceDocument, all: bool) -> Result<ResultDocument> {
    let (inst, alphabet) = decoder_instance(doc)?;
    if all {
        let decoders = enumerate_decoders(&inst)?;
        for d in &decoders {
            if !verify_decoder(&inst, d)? {
                return Err(unverified("enumerated decoder"));
            }
        }
        if decoders.is_empty() {
            return Ok(ResultDocument::infeasible("no decoder passes verification"));
        }
        let mut out = ResultDocument::new(Status::Solution);
        out.decoders = Some(
            decoders
                .iter()
                .map(|d| alphabet.render_decoder(d))
                .collect(),
        );
        return Ok(out);
    }
    inst.require_all_colors_used()?;
    let decoder = match retrieve_decoder_detailed(&inst)? {
        DecoderOutcome::Solution(d) => d,
        DecoderOutcome::Rejected(r) => {
            return Ok(ResultDocument::infeasible(render_rejection(&r, &alphabet)))
        }
        DecoderOutcome::Unsatisfiable => {
            return Ok(ResultDocument::infeasible(
                "the 2-SAT formula is unsatisfiable",
            ))
        }
    };
    let placement =
        place_decoder(&inst, &decoder)?.ok_or_else(|| unverified("retrieved decoder"))?;
    let mut out = ResultDocument::new(Status::Solution);
    out.decoder = Some(alphabet.render_decoder(&decoder));
    out.permutation = Some(permutation_document(inst.graph(), &placement));
    Ok(out)
}

fn cmd_retrieve_coloring(doc: &InstanceDocument) -> Result<ResultDocument> {
    let inst = doc.load()?;
    let (g, decoder, word) = (inst.graph()?, inst.decoder()?, inst.word()?);
    let Some(sol) = retrieve_coloring(g, decoder, word)? else {
        return Ok(ResultDocument::infeasible(
            "the graph is not isomorphic to G(D, w)",
        ));
    };
    if !realizes(g, &sol.coloring, decoder, word, &sol.isomorphism)? {
        return Err(unverified("retrieved coloring"));
    }
    let mut out = ResultDocument::new(Status::Solution);
    out.coloring = Some(coloring_document(g, &inst.alphabet, &sol.coloring));
    out.isomorphism = Some(positions_document(g, &sol.isomorphism.forward));
    Ok(out)
}

fn cmd_verify(doc: &InstanceDocument) -> Result<ResultDocument> {
    let (inst, alphabet) = decoder_instance(doc)?;
    let decoder = doc
        .load()?
        .decoder
        .ok_or_else(|| Error::Malformed("the instance has no decoder".into()))?;
    match place_decoder(&inst, &decoder)? {
        Some(placement) => {
            if !verify_decoder(&inst, &decoder)? {
                return Err(unverified("placement"));
            }
            let mut out = ResultDocument::new(Status::Solution);
            out.decoder = Some(alphabet.render_decoder(&decoder));
            out.permutation = Some(permutation_document(inst.graph(), &placement));
            Ok(out)
        }
        None => Ok(ResultDocument::infeasible(
            "the decoder does not realize the instance",
        )),
    }
}

fn cmd_symmetric(doc: &InstanceDocument, brute: bool, nd_only: bool) -> Result<ResultDocument> {
    let inst = doc.load()?;
    let g = inst.graph()?;
    let mut out = ResultDocument::new(Status::Solution);
    let (alphabet, word, decoder, coloring, f) = if brute {
        let w = brute_symmetric_lettericity(g, g.order().max(1))?
            .ok_or_else(|| Error::Internal("no symmetric realization with n letters".into()))?;
        out.symmetric_lettericity = Some(w.k);
        (w.alphabet, w.word, w.decoder, w.coloring, w.positions)
    } else {
        let w = symmetric_witness(g)?;
        let k = w.alphabet.len();
        if nd_only {
            out.nd = Some(k);
        } else {
            out.symmetric_lettericity = Some(k);
        }
        (w.alphabet, w.word, w.decoder, w.coloring, w.isomorphism)
    };
    if !decoder.is_symmetric() || !realizes(g, &coloring, &decoder, &word, &f)? {
        return Err(unverified("symmetric witness"));
    }
    out.alphabet = Some(alphabet.names().to_vec());
    out.coloring = Some(coloring_document(g, &alphabet, &coloring));
    out.word = Some(alphabet.render_word(&word));
    out.decoder = Some(alphabet.render_decoder(&decoder));
    out.isomorphism = Some(positions_document(g, &f.forward));
    Ok(out)
}

fn cmd_lettericity(doc: &InstanceDocument, max_k: usize) -> Result<ResultDocument> {
    let inst = doc.load()?;
    let g = inst.graph()?;
    let Some(w) = brute_lettericity(g, max_k)? else {
        return Ok(ResultDocument::infeasible(format!(
            "lettericity exceeds {max_k}"
        )));
    };
    if !realizes(g, &w.coloring, &w.decoder, &w.word, &w.positions)? {
        return Err(unverified("lettericity witness"));
    }
    let mut out = ResultDocument::new(Status::Solution);
    out.lettericity = Some(w.k);
    out.alphabet = Some(w.alphabet.names().to_vec());
    out.coloring = Some(coloring_document(g, &w.alphabet, &w.coloring));
    out.word = Some(w.alphabet.render_word(&w.word));
    out.decoder = Some(w.alphabet.render_decoder(&w.decoder));
    out.isomorphism = Some(positions_document(g, &w.positions.forward));
    Ok(out)
}
