//! IRI constants for the vocabularies the pipeline touches.

/// RDF vocabulary
pub mod rdf {
    pub const NS: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
    pub const TYPE: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
    pub const LANG_STRING: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#langString";
    pub const PROPERTY: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#Property";
    pub const FIRST: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#first";
    pub const REST: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#rest";
    pub const NIL: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#nil";
}

/// RDFS vocabulary
pub mod rdfs {
    pub const NS: &str = "http://www.w3.org/2000/01/rdf-schema#";
    pub const CLASS: &str = "http://www.w3.org/2000/01/rdf-schema#Class";
    pub const SUB_CLASS_OF: &str = "http://www.w3.org/2000/01/rdf-schema#subClassOf";
    pub const DOMAIN: &str = "http://www.w3.org/2000/01/rdf-schema#domain";
    pub const RANGE: &str = "http://www.w3.org/2000/01/rdf-schema#range";
    pub const LABEL: &str = "http://www.w3.org/2000/01/rdf-schema#label";
    pub const COMMENT: &str = "http://www.w3.org/2000/01/rdf-schema#comment";
}

/// OWL vocabulary (only the declaration forms the ontology loader understands)
pub mod owl {
    pub const NS: &str = "http://www.w3.org/2002/07/owl#";
    pub const CLASS: &str = "http://www.w3.org/2002/07/owl#Class";
    pub const OBJECT_PROPERTY: &str = "http://www.w3.org/2002/07/owl#ObjectProperty";
    pub const DATATYPE_PROPERTY: &str = "http://www.w3.org/2002/07/owl#DatatypeProperty";
    pub const NAMED_INDIVIDUAL: &str = "http://www.w3.org/2002/07/owl#NamedIndividual";
}

/// XSD datatypes
pub mod xsd {
    pub const NS: &str = "http://www.w3.org/2001/XMLSchema#";
    pub const STRING: &str = "http://www.w3.org/2001/XMLSchema#string";
    pub const INTEGER: &str = "http://www.w3.org/2001/XMLSchema#integer";
    pub const NON_NEGATIVE_INTEGER: &str =
        "http://www.w3.org/2001/XMLSchema#nonNegativeInteger";
    pub const DECIMAL: &str = "http://www.w3.org/2001/XMLSchema#decimal";
    pub const DOUBLE: &str = "http://www.w3.org/2001/XMLSchema#double";
    pub const BOOLEAN: &str = "http://www.w3.org/2001/XMLSchema#boolean";
    pub const DATE: &str = "http://www.w3.org/2001/XMLSchema#date";
    pub const DATE_TIME: &str = "http://www.w3.org/2001/XMLSchema#dateTime";
}

/// FOAF terms on the external whitelist
pub mod foaf {
    pub const NS: &str = "http://xmlns.com/foaf/0.1/";
    pub const NAME: &str = "http://xmlns.com/foaf/0.1/name";
}

/// schema.org terms on the external whitelist
pub mod schema {
    pub const NS: &str = "https://schema.org/";
    pub const NAME: &str = "https://schema.org/name";
    pub const DATE: &str = "https://schema.org/date";
}

/// The criminal-law ontology namespace shipped with the pipeline
pub mod fca {
    pub const NS: &str = "https://growgraph.dev/fcaont#";

    /// Expands a local name in the fca namespace.
    pub fn iri(local: &str) -> String {
        format!("{NS}{local}")
    }

    pub const FROM_DOCUMENT: &str = "https://growgraph.dev/fcaont#fromDocument";
    pub const OFFENSE_CATEGORY: &str = "https://growgraph.dev/fcaont#offenseCategory";
    pub const DURATION_DAYS: &str = "https://growgraph.dev/fcaont#durationDays";
    pub const AMOUNT_EUR: &str = "https://growgraph.dev/fcaont#amountEUR";
    pub const HAS_APPEAL: &str = "https://growgraph.dev/fcaont#hasAppeal";
    pub const HAS_DECISION: &str = "https://growgraph.dev/fcaont#hasDecision";
    pub const HAS_CONVICTION: &str = "https://growgraph.dev/fcaont#hasConviction";
    pub const IMPOSED_PUNISHMENT: &str = "https://growgraph.dev/fcaont#imposedPunishment";
}
