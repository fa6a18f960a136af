//! JSON instance and result documents.
//!
//! Instance keys always serialize in the order `graph`, `alphabet`,
//! `coloring`, `word`, `decoder`, `meta`; absent objects are omitted.

use indexmap::IndexMap;
use lettericity::{Alphabet, Coloring, Decoder, Error, Graph, Result, Word};
use serde::{Deserialize, Serialize};

pub type Pair = [String; 2];

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub vertices: Vec<String>,
    pub edges: Vec<Pair>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph: Option<GraphDocument>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alphabet: Option<Vec<String>>,
    /// Vertex label to letter.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coloring: Option<IndexMap<String, String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub word: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decoder: Option<Vec<Pair>>,
    /// Free-form provenance, e.g. generator parameters.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meta: Option<IndexMap<String, serde_json::Value>>,
}

/// The object a retrieval instance asks for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Word,
    Decoder,
    Coloring,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Word => "word",
            Mode::Decoder => "decoder",
            Mode::Coloring => "coloring",
        }
    }
}

impl InstanceDocument {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Malformed(format!("invalid JSON: {e}")))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents serialize");
        s.push('\n');
        s
    }

    /// The retrieval mode implied by which objects are present: a graph plus
    /// exactly two of word, decoder and coloring.
    pub fn retrieval_mode(&self) -> Option<Mode> {
        self.graph.as_ref()?;
        match (
            self.word.is_some(),
            self.decoder.is_some(),
            self.coloring.is_some(),
        ) {
            (false, true, true) => Some(Mode::Word),
            (true, false, true) => Some(Mode::Decoder),
            (true, true, false) => Some(Mode::Coloring),
            _ => None,
        }
    }

    pub fn load(&self) -> Result<Instance> {
        let graph = self.graph.as_ref().map(build_graph).transpose()?;
        let alphabet = match &self.alphabet {
            Some(names) => Alphabet::new(names.iter().cloned())?,
            None => self.inferred_alphabet()?,
        };
        let coloring = match &self.coloring {
            Some(map) => {
                let g = graph
                    .as_ref()
                    .ok_or_else(|| Error::Malformed("a coloring needs a graph".into()))?;
                Some(build_coloring(g, &alphabet, map)?)
            }
            None => None,
        };
        let word = self
            .word
            .as_ref()
            .map(|tokens| alphabet.word(tokens))
            .transpose()?;
        let decoder = self
            .decoder
            .as_ref()
            .map(|pairs| build_decoder(&alphabet, pairs))
            .transpose()?;
        Ok(Instance {
            graph,
            alphabet,
            coloring,
            word,
            decoder,
        })
    }

    /// Letters in order of first appearance in word, coloring, decoder.
    fn inferred_alphabet(&self) -> Result<Alphabet> {
        let mut alphabet = Alphabet::default();
        let tokens = self
            .word
            .iter()
            .flatten()
            .chain(self.coloring.iter().flat_map(|m| m.values()))
            .chain(self.decoder.iter().flatten().flatten());
        for t in tokens {
            if alphabet.letter(t).is_none() {
                alphabet.push(t.clone())?;
            }
        }
        Ok(alphabet)
    }
}

fn build_graph(doc: &GraphDocument) -> Result<Graph> {
    let mut g = Graph::with_labels(doc.vertices.iter().cloned())?;
    for [u, v] in &doc.edges {
        g.add_edge_by_label(u, v)?;
    }
    Ok(g)
}

fn build_coloring(
    g: &Graph,
    alphabet: &Alphabet,
    map: &IndexMap<String, String>,
) -> Result<Coloring> {
    let mut letters = vec![None; g.order()];
    for (vertex, letter) in map {
        let v = g.vertex_or_err(vertex)?;
        letters[v] = Some(alphabet.letter_or_err(letter)?);
    }
    let letters = letters
        .into_iter()
        .enumerate()
        .map(|(v, l)| {
            l.ok_or_else(|| Error::Malformed(format!("vertex `{}` has no color", g.label(v))))
        })
        .collect::<Result<Vec<_>>>()?;
    Coloring::new(alphabet.len(), letters)
}

fn build_decoder(alphabet: &Alphabet, pairs: &[Pair]) -> Result<Decoder> {
    let mut d = Decoder::new(alphabet.len());
    for [a, b] in pairs {
        let (a, b) = (alphabet.letter_or_err(a)?, alphabet.letter_or_err(b)?);
        if d.contains(a, b) {
            return Err(Error::Malformed(format!(
                "decoder lists `{}{}` twice",
                alphabet.name(a),
                alphabet.name(b)
            )));
        }
        d.insert(a, b);
    }
    Ok(d)
}

/// A loaded instance; objects absent from the document are `None`.
#[derive(Debug, Clone)]
pub struct Instance {
    pub graph: Option<Graph>,
    pub alphabet: Alphabet,
    pub coloring: Option<Coloring>,
    pub word: Option<Word>,
    pub decoder: Option<Decoder>,
}

impl Instance {
    pub fn graph(&self) -> Result<&Graph> {
        required(self.graph.as_ref(), "graph")
    }

    pub fn coloring(&self) -> Result<&Coloring> {
        required(self.coloring.as_ref(), "coloring")
    }

    pub fn word(&self) -> Result<&Word> {
        required(self.word.as_ref(), "word")
    }

    pub fn decoder(&self) -> Result<&Decoder> {
        required(self.decoder.as_ref(), "decoder")
    }
}

fn required<'a, T>(value: Option<&'a T>, what: &str) -> Result<&'a T> {
    value.ok_or_else(|| Error::Malformed(format!("the instance has no {what}")))
}

pub fn graph_document(g: &Graph) -> GraphDocument {
    GraphDocument {
        vertices: g.labels().to_vec(),
        edges: g
            .edges()
            .map(|(u, v)| [g.label(u).to_string(), g.label(v).to_string()])
            .collect(),
    }
}

pub fn coloring_document(
    g: &Graph,
    alphabet: &Alphabet,
    coloring: &Coloring,
) -> IndexMap<String, String> {
    g.vertices()
        .map(|v| {
            (
                g.label(v).to_string(),
                alphabet.name(coloring.letter(v)).to_string(),
            )
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Solution,
    Infeasible,
    Error,
}

/// The answer printed by every subcommand.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph: Option<GraphDocument>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alphabet: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coloring: Option<IndexMap<String, String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub word: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decoder: Option<Vec<Pair>>,
    /// Every solution decoder, for exhaustive enumeration.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decoders: Option<Vec<Vec<Pair>>>,
    /// Vertex labels listed by word position.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub permutation: Option<Vec<String>>,
    /// Vertex label to 1-based word position.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub isomorphism: Option<IndexMap<String, usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nd: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lettericity: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub symmetric_lettericity: Option<usize>,
    /// Why an instance is infeasible or what went wrong.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub elapsed_ms: f64,
}

impl ResultDocument {
    pub fn new(status: Status) -> Self {
        Self {
            status,
            graph: None,
            alphabet: None,
            coloring: None,
            word: None,
            decoder: None,
            decoders: None,
            permutation: None,
            isomorphism: None,
            nd: None,
            lettericity: None,
            symmetric_lettericity: None,
            reason: None,
            elapsed_ms: 0.0,
        }
    }

    pub fn infeasible(reason: impl Into<String>) -> Self {
        Self {
            reason: Some(reason.into()),
            ..Self::new(Status::Infeasible)
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents serialize");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn token() -> impl Strategy<Value = String> {
        "[a-z][a-z0-9_]{0,3}"
    }

    fn document() -> impl Strategy<Value = InstanceDocument> {
        (
            prop::option::of((
                prop::collection::vec(token(), 0..5),
                prop::collection::vec((token(), token()), 0..5),
            )),
            prop::option::of(prop::collection::vec(token(), 0..4)),
            prop::option::of(prop::collection::vec((token(), token()), 0..4)),
            prop::option::of(prop::collection::vec(token(), 0..6)),
            prop::option::of(prop::collection::vec((token(), token()), 0..4)),
            prop::option::of(any::<u32>()),
        )
            .prop_map(|(graph, alphabet, coloring, word, decoder, seed)| {
                InstanceDocument {
                    graph: graph.map(|(vertices, edges)| GraphDocument {
                        vertices,
                        edges: edges.into_iter().map(|(a, b)| [a, b]).collect(),
                    }),
                    alphabet,
                    coloring: coloring.map(|c| c.into_iter().collect()),
                    word,
                    decoder: decoder.map(|d| d.into_iter().map(|(a, b)| [a, b]).collect()),
                    meta: seed
                        .map(|s| IndexMap::from([("seed".to_string(), serde_json::json!(s))])),
                }
            })
    }

    proptest! {
        #[test]
        fn round_trip(doc in document()) {
            let text = doc.to_json();
            let back = InstanceDocument::parse(&text).unwrap();
            prop_assert_eq!(&back, &doc);
            prop_assert_eq!(back.to_json(), text);
        }
    }

    #[test]
    fn canonical_key_order() {
        let text = r#"{"decoder":[["a","b"]],"word":["a","b"],"graph":{"vertices":["x","y"],"edges":[["x","y"]]}}"#;
        let doc = InstanceDocument::parse(text).unwrap();
        let out = serde_json::to_string(&doc).unwrap();
        assert_eq!(
            out,
            r#"{"graph":{"vertices":["x","y"],"edges":[["x","y"]]},"word":["a","b"],"decoder":[["a","b"]]}"#
        );
        assert_eq!(doc.retrieval_mode(), Some(Mode::Coloring));
    }

    #[test]
    fn load_validates_references() {
        let bad_vertex = r#"{"graph":{"vertices":["x"],"edges":[["x","z"]]}}"#;
        assert!(matches!(
            InstanceDocument::parse(bad_vertex).unwrap().load(),
            Err(Error::UnknownVertex(_))
        ));
        let bad_letter = r#"{"alphabet":["a"],"word":["a","q"]}"#;
        assert!(matches!(
            InstanceDocument::parse(bad_letter).unwrap().load(),
            Err(Error::UnknownLetter(_))
        ));
        let partial = r#"{"graph":{"vertices":["x","y"],"edges":[]},"coloring":{"x":"a"}}"#;
        assert!(InstanceDocument::parse(partial).unwrap().load().is_err());
        assert!(InstanceDocument::parse(r#"{"bogus":1}"#).is_err());
    }

    #[test]
    fn alphabet_is_inferred_in_order_of_appearance() {
        let text = r#"{"word":["b","a","n","a","n","e"],"decoder":[["b","a"]]}"#;
        let inst = InstanceDocument::parse(text).unwrap().load().unwrap();
        assert_eq!(inst.alphabet.names(), ["b", "a", "n", "e"]);
    }
}
