//! Line-oriented text formats for algebras and modules.
//!
//! Algebra files:
//!
//! ```text
//! field 2
//! vertices 4
//! arrow a1 1 2
//! relation a2 a1
//! ```
//!
//! A `relation` line lists arrow names right to left, so `relation a2 a1`
//! kills the path that applies `a1` first. Module files:
//!
//! ```text
//! module over corpus:paper_lambda
//! dim 1 1
//! dim 2 1
//! map a1
//! 1
//! ```
//!
//! Each `map` block carries the rows of the target-by-source matrix for
//! one arrow; all-zero matrices may be omitted, and absent `dim` lines
//! default to zero. Vertices are 1-based in files and 0-based in memory.
//! Serialization followed by parsing is the identity, and parsing
//! followed by serialization canonicalizes (sorted dims, zero maps
//! dropped). `#` starts a comment; blank lines are ignored.

use std::path::Path as FsPath;
use std::sync::Arc;

use syzygy_core::corpus;
use syzygy_core::path_algebra::Arrow;
use syzygy_core::{Field, Mat, MonomialAlgebra, Path, Quiver, Rep};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{0}")]
    Invalid(String),
    #[error("{0}")]
    Corpus(String),
}

fn parse_err(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Parse { line, msg: msg.into() }
}

/// Strip comments and blank lines, keeping 1-based line numbers.
fn meaningful_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                None
            } else {
                Some((i + 1, line))
            }
        })
        .collect()
}

fn parse_usize(line: usize, token: &str, what: &str) -> Result<usize, FormatError> {
    token
        .parse::<usize>()
        .map_err(|_| parse_err(line, format!("{what} must be a non-negative integer, got `{token}`")))
}

/// A 1-based vertex from a file token.
fn parse_vertex(line: usize, token: &str, vertex_count: usize) -> Result<usize, FormatError> {
    let v = parse_usize(line, token, "vertex")?;
    if v == 0 || v > vertex_count {
        return Err(parse_err(line, format!("vertex {v} out of range 1..={vertex_count}")));
    }
    Ok(v - 1)
}

pub fn parse_algebra(text: &str) -> Result<Arc<MonomialAlgebra>, FormatError> {
    let lines = meaningful_lines(text);
    let mut iter = lines.iter();

    let (line, first) = iter.next().ok_or_else(|| parse_err(0, "empty algebra file"))?;
    let mut tokens = first.split_whitespace();
    if tokens.next() != Some("field") {
        return Err(parse_err(*line, "an algebra file must start with `field p`"));
    }
    let p = tokens
        .next()
        .ok_or_else(|| parse_err(*line, "`field` needs a characteristic"))?
        .parse::<u64>()
        .map_err(|_| parse_err(*line, "field characteristic must be an integer"))?;
    if let Some(e) = tokens.next() {
        if e != "1" {
            return Err(parse_err(*line, "only prime fields are accepted in files (extension degree must be 1)"));
        }
    }
    let field = Field::prime(p).map_err(|e| parse_err(*line, e.to_string()))?;

    let (line, second) = iter.next().ok_or_else(|| parse_err(*line, "expected `vertices n`"))?;
    let mut tokens = second.split_whitespace();
    if tokens.next() != Some("vertices") {
        return Err(parse_err(*line, "expected `vertices n` after the field line"));
    }
    let vertex_count =
        parse_usize(*line, tokens.next().ok_or_else(|| parse_err(*line, "`vertices` needs a count"))?, "vertex count")?;
    if vertex_count == 0 {
        return Err(parse_err(*line, "an algebra needs at least one vertex"));
    }

    let mut arrows: Vec<Arrow> = Vec::new();
    let mut relation_lines: Vec<(usize, Vec<String>)> = Vec::new();
    for (line, text) in iter {
        let mut tokens = text.split_whitespace();
        match tokens.next() {
            Some("arrow") => {
                let name = tokens
                    .next()
                    .ok_or_else(|| parse_err(*line, "`arrow` needs a name, a source, and a target"))?
                    .to_string();
                let src = tokens.next().ok_or_else(|| parse_err(*line, "`arrow` is missing its source"))?;
                let tgt = tokens.next().ok_or_else(|| parse_err(*line, "`arrow` is missing its target"))?;
                let source = parse_vertex(*line, src, vertex_count)?;
                let target = parse_vertex(*line, tgt, vertex_count)?;
                arrows.push(Arrow { name, source, target });
            }
            Some("relation") => {
                let names: Vec<String> = tokens.map(str::to_string).collect();
                if names.len() < 2 {
                    return Err(parse_err(*line, "a relation must list at least two arrows"));
                }
                relation_lines.push((*line, names));
            }
            Some(other) => {
                return Err(parse_err(*line, format!("unexpected keyword `{other}` in an algebra file")));
            }
            None => unreachable!("blank lines were filtered"),
        }
    }

    let quiver = Quiver::new(vertex_count, arrows).map_err(|e| FormatError::Invalid(e.to_string()))?;
    let mut relations = Vec::new();
    for (line, names) in relation_lines {
        // File order is right to left; Path wants application order.
        let mut indices = Vec::with_capacity(names.len());
        for name in names.iter().rev() {
            let a = quiver
                .arrow_by_name(name)
                .ok_or_else(|| parse_err(line, format!("relation names unknown arrow `{name}`")))?;
            indices.push(a);
        }
        let path = Path::from_arrows(&quiver, indices)
            .map_err(|e| parse_err(line, format!("relation does not compose: {e}")))?;
        relations.push(path);
    }

    MonomialAlgebra::new(quiver, relations, field)
        .map(Arc::new)
        .map_err(|e| FormatError::Invalid(e.to_string()))
}

pub fn serialize_algebra(alg: &MonomialAlgebra) -> String {
    let mut out = String::new();
    out.push_str(&format!("field {}\n", alg.field().characteristic()));
    out.push_str(&format!("vertices {}\n", alg.vertex_count()));
    for arrow in alg.quiver().arrows() {
        out.push_str(&format!("arrow {} {} {}\n", arrow.name, arrow.source + 1, arrow.target + 1));
    }
    for rel in alg.relations() {
        out.push_str(&format!("relation {}\n", alg.display_path(rel)));
    }
    out
}

/// Resolve an algebra spec: `corpus:<name>` or a file path (relative to
/// `base` when not absolute).
pub fn load_algebra(spec: &str, base: &FsPath) -> Result<Arc<MonomialAlgebra>, FormatError> {
    if let Some(name) = spec.strip_prefix("corpus:") {
        let field = Field::prime(2).expect("2 is prime");
        let entry = corpus::builtin(name, field).map_err(|e| FormatError::Corpus(e.to_string()))?;
        return Ok(entry.alg);
    }
    let path = base.join(spec);
    let text = std::fs::read_to_string(&path)
        .map_err(|source| FormatError::Io { path: path.display().to_string(), source })?;
    match first_keyword(&text) {
        Some("field") => parse_algebra(&text),
        Some("module") => Err(FormatError::Invalid(format!("{spec} is a module file, expected an algebra"))),
        _ => Err(parse_err(0, "an algebra file must start with `field p`")),
    }
}

pub fn parse_module(text: &str, base: &FsPath) -> Result<Rep, FormatError> {
    let lines = meaningful_lines(text);
    let mut pos = 0;

    let (line, first) = *lines.first().ok_or_else(|| parse_err(0, "empty module file"))?;
    let spec = first
        .strip_prefix("module over ")
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .ok_or_else(|| parse_err(line, "a module file must start with `module over <algebra>`"))?;
    let alg = load_algebra(spec, base)?;
    pos += 1;

    let vertex_count = alg.vertex_count();
    let field = alg.field();
    let mut dims = vec![0usize; vertex_count];
    while pos < lines.len() {
        let (line, text) = lines[pos];
        let mut tokens = text.split_whitespace();
        if tokens.next() != Some("dim") {
            break;
        }
        let v = parse_vertex(line, tokens.next().ok_or_else(|| parse_err(line, "`dim` needs a vertex"))?, vertex_count)?;
        dims[v] = parse_usize(line, tokens.next().ok_or_else(|| parse_err(line, "`dim` needs a dimension"))?, "dimension")?;
        pos += 1;
    }

    let quiver = alg.quiver();
    let mut mats: Vec<Mat> = quiver
        .arrows()
        .iter()
        .map(|a| Mat::zero(field, dims[a.target], dims[a.source]))
        .collect();
    while pos < lines.len() {
        let (line, text) = lines[pos];
        let mut tokens = text.split_whitespace();
        match tokens.next() {
            Some("map") => {}
            Some("dim") => return Err(parse_err(line, "`dim` lines must come before `map` blocks")),
            Some(other) => return Err(parse_err(line, format!("unexpected keyword `{other}` in a module file"))),
            None => unreachable!("blank lines were filtered"),
        }
        let name = tokens.next().ok_or_else(|| parse_err(line, "`map` needs an arrow name"))?;
        let a = quiver
            .arrow_by_name(name)
            .ok_or_else(|| parse_err(line, format!("unknown arrow `{name}`")))?;
        let arrow = &quiver.arrows()[a];
        let (rows, cols) = (dims[arrow.target], dims[arrow.source]);
        pos += 1;
        let mut entries: Vec<Vec<u64>> = Vec::with_capacity(rows);
        for r in 0..rows {
            let (row_line, row_text) = *lines
                .get(pos)
                .ok_or_else(|| parse_err(line, format!("`map {name}` needs {rows} rows, found {r}")))?;
            let mut row = Vec::with_capacity(cols);
            for token in row_text.split_whitespace() {
                let x = token
                    .parse::<u64>()
                    .map_err(|_| parse_err(row_line, format!("matrix entry `{token}` is not an integer")))?;
                if !field.is_valid(x) {
                    return Err(parse_err(row_line, format!("matrix entry {x} is not reduced modulo {}", field.characteristic())));
                }
                row.push(x);
            }
            if row.len() != cols {
                return Err(parse_err(row_line, format!("row has {} entries, expected {cols}", row.len())));
            }
            entries.push(row);
            pos += 1;
        }
        mats[a] = if rows == 0 { Mat::zero(field, 0, cols) } else { Mat::from_rows(field, &entries) };
    }

    Rep::new(alg, dims, mats).map_err(|e| FormatError::Invalid(e.to_string()))
}

pub fn serialize_module(m: &Rep, over: &str) -> String {
    let mut out = String::new();
    out.push_str(&format!("module over {over}\n"));
    for (v, d) in m.dims().iter().enumerate() {
        out.push_str(&format!("dim {} {}\n", v + 1, d));
    }
    for (a, arrow) in m.alg().quiver().arrows().iter().enumerate() {
        let mat = m.arrow_matrix(a);
        if mat.is_zero() {
            continue;
        }
        out.push_str(&format!("map {}\n", arrow.name));
        for r in 0..mat.rows() {
            let row: Vec<String> = (0..mat.cols()).map(|c| mat.get(r, c).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
    }
    out
}

fn first_keyword(text: &str) -> Option<&str> {
    meaningful_lines(text).first().and_then(|(_, l)| l.split_whitespace().next())
}

/// Either kind of input file, sniffed by its first keyword.
pub enum Input {
    Algebra(Arc<MonomialAlgebra>),
    Module(Rep),
}

/// Load `corpus:<name>` or a file, deciding algebra vs module by the
/// first keyword. Relative `module over` targets resolve against the
/// module file's own directory.
pub fn load_input(spec: &str) -> Result<Input, FormatError> {
    if spec.starts_with("corpus:") {
        return load_algebra(spec, FsPath::new(".")).map(Input::Algebra);
    }
    let path = FsPath::new(spec);
    let text = std::fs::read_to_string(path)
        .map_err(|source| FormatError::Io { path: spec.to_string(), source })?;
    let base = path.parent().unwrap_or_else(|| FsPath::new("."));
    match first_keyword(&text) {
        Some("field") => parse_algebra(&text).map(Input::Algebra),
        Some("module") => parse_module(&text, base).map(Input::Module),
        Some(other) => Err(parse_err(1, format!("expected `field` or `module`, found `{other}`"))),
        None => Err(parse_err(0, "empty input file")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use syzygy_core::corpus::{entries, random_module};

    #[test]
    fn algebra_files_round_trip_through_the_corpus() {
        let field = Field::prime(2).unwrap();
        for entry in entries(field) {
            let text = serialize_algebra(&entry.alg);
            let parsed = parse_algebra(&text).unwrap_or_else(|e| panic!("{}: {e}", entry.name));
            assert_eq!(*parsed, *entry.alg, "{} round trip", entry.name);
            assert_eq!(serialize_algebra(&parsed), text, "{} canonical form", entry.name);
        }
    }

    #[test]
    fn relation_lines_read_right_to_left() {
        let text = "field 2\nvertices 3\narrow a 1 2\narrow b 2 3\nrelation b a\n";
        let alg = parse_algebra(text).unwrap();
        let rel = &alg.relations()[0];
        // Application order starts with `a`: the path runs 1 -> 3.
        assert_eq!(rel.start(), 0);
        assert_eq!(rel.end(alg.quiver()), 2);
        assert_eq!(alg.dim(), 5);
    }

    #[test]
    fn module_files_round_trip() {
        let field = Field::prime(2).unwrap();
        for entry in entries(field) {
            let over = format!("corpus:{}", entry.name);
            for seed in [3, 11] {
                let m = random_module(&entry.alg, 3, seed);
                let text = serialize_module(&m, &over);
                let parsed = parse_module(&text, FsPath::new(".")).unwrap();
                assert_eq!(parsed, m, "{} seed {seed}", entry.name);
            }
        }
    }

    #[test]
    fn comments_and_defaults_are_tolerated() {
        let text = "# a simple at the source\nmodule over corpus:linear_an(2)\ndim 1 1 # the only dim line\n";
        let m = parse_module(text, FsPath::new(".")).unwrap();
        assert_eq!(m.dims(), &[1, 0]);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let bad_field = parse_algebra("field 4\nvertices 1\n");
        assert!(matches!(bad_field, Err(FormatError::Parse { line: 1, .. })), "{bad_field:?}");

        let bad_relation = parse_algebra("field 2\nvertices 2\narrow a 1 2\nrelation a c\n");
        assert!(matches!(bad_relation, Err(FormatError::Parse { line: 4, .. })), "{bad_relation:?}");

        let no_compose = parse_algebra("field 2\nvertices 2\narrow a 1 2\nrelation a a\n");
        assert!(matches!(no_compose, Err(FormatError::Parse { line: 4, .. })), "{no_compose:?}");

        let bad_entry = parse_module(
            "module over corpus:linear_an(2)\ndim 1 1\ndim 2 1\nmap b1\n7\n",
            FsPath::new("."),
        );
        assert!(matches!(bad_entry, Err(FormatError::Parse { line: 5, .. })), "{bad_entry:?}");

        let short_row = parse_module(
            "module over corpus:linear_an(2)\ndim 1 2\ndim 2 1\nmap b1\n1\n",
            FsPath::new("."),
        );
        assert!(matches!(short_row, Err(FormatError::Parse { line: 5, .. })), "{short_row:?}");
    }

    #[test]
    fn modules_must_satisfy_the_relations() {
        // Over the truncated loop k[x]/x^2 a 1-dimensional space with x
        // acting as the identity breaks the relation.
        let text = "module over corpus:loop(2)\ndim 1 1\nmap x\n1\n";
        let err = parse_module(text, FsPath::new(".")).unwrap_err();
        assert!(matches!(err, FormatError::Invalid(_)), "{err:?}");
    }
}
