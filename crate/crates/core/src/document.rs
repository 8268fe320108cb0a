//! The JSON algebra document shared by every command.
//!
//! ```json
//! {"size": 3, "unit": 2, "table": [[2,2,2],[2,2,2],[0,1,2]], "names": ["a","b","1"]}
//! ```

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bitset::MAX_CARRIER;
use crate::error::Error;
use crate::magma::{Kind, MagmaTable};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraDocument {
    pub size: usize,
    pub unit: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<Kind>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DiagnosticCode {
    MalformedJson,
    EmptyCarrier,
    TooLarge,
    SizeMismatch,
    EntryOutOfRange,
    UnitOutOfRange,
    NameCount,
}

impl DiagnosticCode {
    pub fn as_str(self) -> &'static str {
        match self {
            DiagnosticCode::MalformedJson => "E001",
            DiagnosticCode::EmptyCarrier => "E002",
            DiagnosticCode::TooLarge => "E003",
            DiagnosticCode::SizeMismatch => "E004",
            DiagnosticCode::EntryOutOfRange => "E005",
            DiagnosticCode::UnitOutOfRange => "E006",
            DiagnosticCode::NameCount => "E007",
        }
    }
}

/// A parse failure with the offending location: `line:column` for JSON
/// syntax errors, a field path such as `table[1][3]` otherwise.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Diagnostic {
    pub code: DiagnosticCode,
    pub location: String,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} at {}: {}",
            self.code.as_str(),
            self.location,
            self.message
        )
    }
}

impl std::error::Error for Diagnostic {}

fn diag(
    code: DiagnosticCode,
    location: impl Into<String>,
    message: impl Into<String>,
) -> Diagnostic {
    Diagnostic {
        code,
        location: location.into(),
        message: message.into(),
    }
}

impl AlgebraDocument {
    pub fn from_table(m: &MagmaTable) -> Self {
        AlgebraDocument {
            size: m.size(),
            unit: m.unit(),
            table: m.rows(),
            names: None,
            source: None,
            kind: None,
        }
    }

    pub fn with_names(mut self, names: Option<Vec<String>>) -> Self {
        self.names = names;
        self
    }

    pub fn with_source(mut self, source: impl Into<String>) -> Self {
        self.source = Some(source.into());
        self
    }

    pub fn with_kind(mut self, kind: Kind) -> Self {
        self.kind = Some(kind);
        self
    }

    /// Checks the document against the table invariants.
    pub fn validate(&self) -> Result<(), Diagnostic> {
        use DiagnosticCode::*;
        if self.size == 0 {
            return Err(diag(EmptyCarrier, "size", "size must be positive"));
        }
        if self.size > MAX_CARRIER {
            return Err(diag(
                TooLarge,
                "size",
                format!("size {} exceeds the limit of {MAX_CARRIER}", self.size),
            ));
        }
        if self.table.len() != self.size {
            return Err(diag(
                SizeMismatch,
                "table",
                format!("{} rows for size {}", self.table.len(), self.size),
            ));
        }
        for (r, row) in self.table.iter().enumerate() {
            if row.len() != self.size {
                return Err(diag(
                    SizeMismatch,
                    format!("table[{r}]"),
                    format!("{} entries for size {}", row.len(), self.size),
                ));
            }
            if let Some(c) = row.iter().position(|&v| v >= self.size) {
                return Err(diag(
                    EntryOutOfRange,
                    format!("table[{r}][{c}]"),
                    format!("entry {} is not below size {}", row[c], self.size),
                ));
            }
        }
        if self.unit >= self.size {
            return Err(diag(
                UnitOutOfRange,
                "unit",
                format!("unit {} is not below size {}", self.unit, self.size),
            ));
        }
        if let Some(names) = &self.names {
            if names.len() != self.size {
                return Err(diag(
                    NameCount,
                    "names",
                    format!("{} names for size {}", names.len(), self.size),
                ));
            }
        }
        Ok(())
    }

    pub fn to_table(&self) -> Result<MagmaTable, Diagnostic> {
        self.validate()?;
        MagmaTable::new(self.unit, self.table.clone())
            .map_err(|e: Error| diag(DiagnosticCode::SizeMismatch, "table", e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("document serializes")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    /// Display name of element `i`; falls back to the index.
    pub fn name(&self, i: usize) -> String {
        element_name(self.names.as_deref(), i)
    }
}

pub fn element_name(names: Option<&[String]>, i: usize) -> String {
    names
        .and_then(|n| n.get(i).cloned())
        .unwrap_or_else(|| i.to_string())
}

/// Parses and validates a document.
pub fn parse_document(text: &[u8]) -> Result<AlgebraDocument, Diagnostic> {
    let doc: AlgebraDocument = serde_json::from_slice(text).map_err(|e| {
        diag(
            DiagnosticCode::MalformedJson,
            format!("{}:{}", e.line(), e.column()),
            e.to_string(),
        )
    })?;
    doc.validate()?;
    Ok(doc)
}

pub fn parse_algebra(text: &[u8]) -> Result<MagmaTable, Diagnostic> {
    parse_document(text)?.to_table()
}
