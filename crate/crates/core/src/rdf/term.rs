//! RDF terms and triples with canonical N-Triples rendering.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::vocab;

/// Errors raised while constructing terms.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TermError {
    #[error("invalid IRI {0:?}: {1}")]
    InvalidIri(String, &'static str),
    #[error("invalid blank node label {0:?}: labels must match [A-Za-z0-9_]+")]
    InvalidBlankLabel(String),
    #[error("invalid language tag {0:?}")]
    InvalidLanguageTag(String),
    #[error("unknown prefix {0:?}")]
    UnknownPrefix(String),
    #[error("malformed qname {0:?}: expected \"prefix:local\"")]
    MalformedQName(String),
}

/// An absolute IRI. Validation is syntactic: non-empty, carries a scheme
/// separator, and contains no whitespace or angle brackets.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Iri(String);

impl Iri {
    pub fn new(value: impl Into<String>) -> Result<Self, TermError> {
        let value = value.into();
        if value.is_empty() {
            return Err(TermError::InvalidIri(value, "empty"));
        }
        if !value.contains(':') {
            return Err(TermError::InvalidIri(value, "missing scheme separator ':'"));
        }
        if value
            .chars()
            .any(|c| c.is_whitespace() || c == '<' || c == '>')
        {
            return Err(TermError::InvalidIri(
                value,
                "contains whitespace or angle bracket",
            ));
        }
        Ok(Iri(value))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// Text after the last '#' or '/', used as a display name in tables.
    pub fn local_name(&self) -> &str {
        match self.0.rfind(['#', '/']) {
            Some(pos) if pos + 1 < self.0.len() => &self.0[pos + 1..],
            _ => &self.0,
        }
    }
}

impl fmt::Display for Iri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.0)
    }
}

/// A blank node with a document-scoped label.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BlankNode(String);

impl BlankNode {
    pub fn new(label: impl Into<String>) -> Result<Self, TermError> {
        let label = label.into();
        if label.is_empty()
            || !label
                .chars()
                .all(|c| c.is_ascii_alphanumeric() || c == '_')
        {
            return Err(TermError::InvalidBlankLabel(label));
        }
        Ok(BlankNode(label))
    }

    pub fn label(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for BlankNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "_:{}", self.0)
    }
}

/// An RDF literal: lexical form plus datatype, with an optional language tag
/// present exactly when the datatype is rdf:langString.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Literal {
    lexical: String,
    datatype: Iri,
    language: Option<String>,
}

impl Literal {
    /// A plain literal; datatype defaults to xsd:string.
    pub fn string(lexical: impl Into<String>) -> Self {
        Literal {
            lexical: lexical.into(),
            datatype: Iri::new(vocab::xsd::STRING).expect("xsd:string is a valid IRI"),
            language: None,
        }
    }

    /// A typed literal. An rdf:langString datatype is rejected here because it
    /// requires a language tag; use [`Literal::lang`].
    pub fn typed(lexical: impl Into<String>, datatype: Iri) -> Result<Self, TermError> {
        if datatype.as_str() == vocab::rdf::LANG_STRING {
            return Err(TermError::InvalidLanguageTag(String::from(
                "rdf:langString literal requires a language tag",
            )));
        }
        Ok(Literal {
            lexical: lexical.into(),
            datatype,
            language: None,
        })
    }

    /// A language-tagged string; the datatype is forced to rdf:langString.
    pub fn lang(lexical: impl Into<String>, tag: impl Into<String>) -> Result<Self, TermError> {
        let tag = tag.into();
        if !valid_language_tag(&tag) {
            return Err(TermError::InvalidLanguageTag(tag));
        }
        Ok(Literal {
            lexical: lexical.into(),
            datatype: Iri::new(vocab::rdf::LANG_STRING).expect("valid IRI"),
            language: Some(tag),
        })
    }

    pub fn lexical(&self) -> &str {
        &self.lexical
    }

    pub fn datatype(&self) -> &Iri {
        &self.datatype
    }

    pub fn language(&self) -> Option<&str> {
        self.language.as_deref()
    }
}

fn valid_language_tag(tag: &str) -> bool {
    let mut parts = tag.split('-');
    match parts.next() {
        Some(first) if !first.is_empty() && first.chars().all(|c| c.is_ascii_alphabetic()) => {}
        _ => return false,
    }
    parts.all(|p| !p.is_empty() && p.chars().all(|c| c.is_ascii_alphanumeric()))
}

/// Escapes a lexical form for N-Triples output. Non-ASCII is left as UTF-8.
pub fn escape_literal(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '\\' => out.push_str("\\\\"),
            '"' => out.push_str("\\\""),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            other => out.push(other),
        }
    }
    out
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{}\"", escape_literal(&self.lexical))?;
        if let Some(tag) = &self.language {
            write!(f, "@{tag}")
        } else if self.datatype.as_str() == vocab::xsd::STRING {
            Ok(())
        } else {
            write!(f, "^^{}", self.datatype)
        }
    }
}

/// Subject position of a triple: an IRI or a blank node.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Resource {
    Iri(Iri),
    Blank(BlankNode),
}

impl Resource {
    pub fn as_iri(&self) -> Option<&Iri> {
        match self {
            Resource::Iri(iri) => Some(iri),
            Resource::Blank(_) => None,
        }
    }
}

impl fmt::Display for Resource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Resource::Iri(iri) => iri.fmt(f),
            Resource::Blank(b) => b.fmt(f),
        }
    }
}

impl From<Iri> for Resource {
    fn from(iri: Iri) -> Self {
        Resource::Iri(iri)
    }
}

impl From<BlankNode> for Resource {
    fn from(b: BlankNode) -> Self {
        Resource::Blank(b)
    }
}

/// Any term: IRI, blank node, or literal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Term {
    Iri(Iri),
    Blank(BlankNode),
    Literal(Literal),
}

impl Term {
    pub fn as_resource(&self) -> Option<Resource> {
        match self {
            Term::Iri(iri) => Some(Resource::Iri(iri.clone())),
            Term::Blank(b) => Some(Resource::Blank(b.clone())),
            Term::Literal(_) => None,
        }
    }

    pub fn as_iri(&self) -> Option<&Iri> {
        match self {
            Term::Iri(iri) => Some(iri),
            _ => None,
        }
    }

    pub fn as_literal(&self) -> Option<&Literal> {
        match self {
            Term::Literal(l) => Some(l),
            _ => None,
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Iri(iri) => iri.fmt(f),
            Term::Blank(b) => b.fmt(f),
            Term::Literal(l) => l.fmt(f),
        }
    }
}

impl From<Iri> for Term {
    fn from(iri: Iri) -> Self {
        Term::Iri(iri)
    }
}

impl From<BlankNode> for Term {
    fn from(b: BlankNode) -> Self {
        Term::Blank(b)
    }
}

impl From<Literal> for Term {
    fn from(l: Literal) -> Self {
        Term::Literal(l)
    }
}

impl From<Resource> for Term {
    fn from(r: Resource) -> Self {
        match r {
            Resource::Iri(iri) => Term::Iri(iri),
            Resource::Blank(b) => Term::Blank(b),
        }
    }
}

/// One RDF statement. The subject is never a literal and the predicate is
/// always an IRI, both enforced by the types.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Triple {
    pub subject: Resource,
    pub predicate: Iri,
    pub object: Term,
}

impl Triple {
    pub fn new(
        subject: impl Into<Resource>,
        predicate: Iri,
        object: impl Into<Term>,
    ) -> Self {
        Triple {
            subject: subject.into(),
            predicate,
            object: object.into(),
        }
    }
}

impl fmt::Display for Triple {
    /// Canonical N-Triples line, used for deterministic ordering and export.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} .", self.subject, self.predicate, self.object)
    }
}

/// Canonical N-Triples line for a triple.
pub fn canonical_ntriple(triple: &Triple) -> String {
    triple.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iri(s: &str) -> Iri {
        Iri::new(s).unwrap()
    }

    #[test]
    fn iri_rejects_broken_values() {
        assert!(Iri::new("").is_err());
        assert!(Iri::new("noscheme").is_err());
        assert!(Iri::new("urn:has space").is_err());
        assert!(Iri::new("urn:a<b").is_err());
        assert!(Iri::new("https://growgraph.dev/fcaont#Crime").is_ok());
    }

    #[test]
    fn blank_label_charset() {
        assert!(BlankNode::new("b0").is_ok());
        assert!(BlankNode::new("0abc_X").is_ok());
        assert!(BlankNode::new("").is_err());
        assert!(BlankNode::new("a-b").is_err());
    }

    #[test]
    fn literal_language_iff_langstring() {
        let plain = Literal::string("x");
        assert_eq!(plain.datatype().as_str(), vocab::xsd::STRING);
        assert!(plain.language().is_none());

        let tagged = Literal::lang("x", "en").unwrap();
        assert_eq!(tagged.datatype().as_str(), vocab::rdf::LANG_STRING);
        assert_eq!(tagged.language(), Some("en"));

        let bad = Literal::typed("x", iri(vocab::rdf::LANG_STRING));
        assert!(bad.is_err());
        assert!(Literal::lang("x", "9en").is_err());
    }

    #[test]
    fn canonical_line_omits_xsd_string() {
        let t = Triple::new(iri("urn:a"), iri("urn:b"), Literal::string("x"));
        assert_eq!(canonical_ntriple(&t), r#"<urn:a> <urn:b> "x" ."#);
    }

    #[test]
    fn canonical_line_keeps_other_datatypes() {
        let dt = iri("http://www.w3.org/2001/XMLSchema#nonNegativeInteger");
        let t = Triple::new(
            iri("urn:a"),
            iri("urn:b"),
            Literal::typed("30", dt).unwrap(),
        );
        assert_eq!(
            canonical_ntriple(&t),
            r#"<urn:a> <urn:b> "30"^^<http://www.w3.org/2001/XMLSchema#nonNegativeInteger> ."#
        );
    }

    #[test]
    fn canonical_line_escapes_quote_and_newline() {
        let t = Triple::new(
            iri("urn:a"),
            iri("urn:b"),
            Literal::string("say \"hi\"\nnext"),
        );
        assert_eq!(
            canonical_ntriple(&t),
            r#"<urn:a> <urn:b> "say \"hi\"\nnext" ."#
        );
    }

    #[test]
    fn langstring_renders_tag() {
        let t = Triple::new(iri("urn:a"), iri("urn:b"), Literal::lang("vol", "fr").unwrap());
        assert_eq!(canonical_ntriple(&t), r#"<urn:a> <urn:b> "vol"@fr ."#);
    }
}
