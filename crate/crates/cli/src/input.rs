use std::fs;
use std::io::Read;

use degspread_core::{parse_edge_list, parse_graph6, Graph, ParseError};

use crate::args::InputFormat;

/// Failure to obtain a graph from the command line input.
#[derive(Debug)]
pub enum InputError {
    Io(String, std::io::Error),
    Parse(String, ParseError),
}

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            InputError::Io(path, e) => write!(f, "cannot read {path}: {e}"),
            InputError::Parse(path, e) => write!(f, "{path}: {e}"),
        }
    }
}

pub fn read_source(path: &str, stdin: &mut dyn Read) -> Result<String, InputError> {
    let mut text = String::new();
    let res = if path == "-" {
        stdin.read_to_string(&mut text).map(|_| ())
    } else {
        fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| InputError::Io(display_name(path).into(), e))?;
    Ok(text)
}

fn display_name(path: &str) -> &str {
    if path == "-" {
        "<stdin>"
    } else {
        path
    }
}

pub fn detect(text: &str) -> InputFormat {
    match text.trim_start().chars().next() {
        Some(c) if c.is_ascii_digit() => InputFormat::EdgeList,
        _ => InputFormat::Graph6,
    }
}

pub fn parse(text: &str, format: InputFormat) -> Result<Graph, ParseError> {
    let format = if format == InputFormat::Auto { detect(text) } else { format };
    match format {
        InputFormat::EdgeList => parse_edge_list(text),
        _ => parse_graph6(text),
    }
}

pub fn load(path: &str, format: InputFormat, stdin: &mut dyn Read) -> Result<Graph, InputError> {
    let text = read_source(path, stdin)?;
    parse(&text, format).map_err(|e| InputError::Parse(display_name(path).into(), e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn detection() {
        assert_eq!(detect("4\n0 1\n"), InputFormat::EdgeList);
        assert_eq!(detect("  Bw"), InputFormat::Graph6);
        assert_eq!(detect(">>graph6<<Bw"), InputFormat::Graph6);
        assert_eq!(parse("Bw", InputFormat::Auto).unwrap(), Graph::complete(3));
        assert_eq!(parse("3\n0 1\n1 2\n0 2", InputFormat::Auto).unwrap(), Graph::complete(3));
        assert!(parse("3\n0 1", InputFormat::Graph6).is_err());
    }

    #[test]
    fn stdin_source() {
        let mut data: &[u8] = b"A_\n";
        assert_eq!(load("-", InputFormat::Auto, &mut data).unwrap(), Graph::complete(2));
        let mut empty: &[u8] = b"";
        assert!(matches!(load("/nonexistent/file", InputFormat::Auto, &mut empty), Err(InputError::Io(..))));
    }
}
