//! A line-oriented language for diagrams:
//!
//! ```text
//! # a circle
//! input 0
//! cup 1
//! cap 1
//! ```
//!
//! `input <n>` opens with `n` V1 strands, then one generator per line:
//! `cup <i>`, `cap <i>`, `proj <d1> ...`, `incl <d1> ...`, `jw <n1> ...`.

use std::fmt;

use super::{Intertwiner, Layer};
use crate::error::{Error, Result};
use crate::tensor_rep::{ModuleShape, TensorVector};

/// A validated diagram: the input width and the layers bottom to top, with
/// the shape after every layer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NetworkExpr {
    input: usize,
    layers: Vec<(usize, Layer)>,
    shapes: Vec<ModuleShape>,
}

impl NetworkExpr {
    pub fn new(input: usize) -> Self {
        NetworkExpr {
            input,
            layers: Vec::new(),
            shapes: vec![ModuleShape::ones(input)],
        }
    }

    pub fn from_layers(input: usize, layers: impl IntoIterator<Item = Layer>) -> Result<Self> {
        let mut e = Self::new(input);
        for layer in layers {
            e.push(layer, 0)?;
        }
        Ok(e)
    }

    /// Appends a layer, checking that it fits the current shape. `line` is
    /// only used for diagnostics.
    pub fn push(&mut self, layer: Layer, line: usize) -> Result<()> {
        let current = self.output_shape().clone();
        match layer.out_shape(&current) {
            Ok(next) => {
                self.layers.push((line, layer));
                self.shapes.push(next);
                Ok(())
            }
            Err(message) => Err(Error::NetworkWidth {
                layer: self.layers.len() + 1,
                line,
                generator: layer.name(),
                message,
            }),
        }
    }

    pub fn input_width(&self) -> usize {
        self.input
    }

    pub fn input_shape(&self) -> &ModuleShape {
        &self.shapes[0]
    }

    pub fn output_shape(&self) -> &ModuleShape {
        self.shapes.last().expect("shape list starts non-empty")
    }

    pub fn layers(&self) -> impl Iterator<Item = &Layer> {
        self.layers.iter().map(|(_, l)| l)
    }

    /// Pushes a vector through every layer.
    pub fn apply(&self, v: &TensorVector) -> Result<TensorVector> {
        if v.shape() != self.input_shape() {
            return Err(Error::ShapeMismatch(format!(
                "network input is {}, vector lives in {}",
                self.input_shape(),
                v.shape()
            )));
        }
        let mut w = v.clone();
        for (_, layer) in &self.layers {
            w = layer.apply(&w)?;
        }
        Ok(w)
    }

    /// `self` followed by `other` (stacked on top).
    pub fn then(&self, other: &NetworkExpr) -> Result<NetworkExpr> {
        if other.input_shape() != self.output_shape() {
            return Err(Error::ShapeMismatch(format!(
                "cannot stack a network on {} above one ending in {}",
                other.input_shape(),
                self.output_shape()
            )));
        }
        let mut e = self.clone();
        for (line, layer) in &other.layers {
            e.push(layer.clone(), *line)?;
        }
        Ok(e)
    }
}

impl fmt::Display for NetworkExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "input {}", self.input)?;
        for (_, layer) in &self.layers {
            writeln!(f, "{}", layer.name())?;
        }
        Ok(())
    }
}

struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokenize(line: &str) -> Vec<Token<'_>> {
    let body = match line.find('#') {
        Some(pos) => &line[..pos],
        None => line,
    };
    let mut out = Vec::new();
    let mut start = None;
    for (pos, ch) in body.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push(Token {
                    text: &body[s..pos],
                    column: body[..s].chars().count() + 1,
                });
            }
        } else if start.is_none() {
            start = Some(pos);
        }
    }
    if let Some(s) = start {
        out.push(Token {
            text: &body[s..],
            column: body[..s].chars().count() + 1,
        });
    }
    out
}

pub fn parse_network(text: &str) -> Result<NetworkExpr> {
    let mut expr: Option<NetworkExpr> = None;
    let mut last_line = 0;
    let mut last_col = 1;
    for (lineno, line) in text.lines().enumerate() {
        let lineno = lineno + 1;
        last_line = lineno;
        last_col = line.chars().count() + 1;
        let tokens = tokenize(line);
        let Some(head) = tokens.first() else {
            continue;
        };
        let perr = |column: usize, message: String| Error::NetworkParse {
            line: lineno,
            column,
            message,
        };
        let end_col = line.split('#').next().unwrap_or("").trim_end().chars().count() + 1;
        let mut args = Vec::with_capacity(tokens.len() - 1);
        for t in &tokens[1..] {
            let n: usize = t
                .text
                .parse()
                .map_err(|_| perr(t.column, format!("expected a nonnegative integer, found {:?}", t.text)))?;
            args.push(n);
        }
        let single = |what: &str| -> Result<usize> {
            match args.as_slice() {
                [n] => Ok(*n),
                [] => Err(perr(end_col, format!("{what} takes one integer argument"))),
                _ => Err(perr(tokens[2].column, format!("{what} takes one integer argument"))),
            }
        };
        let list = |what: &str| -> Result<Vec<usize>> {
            if args.is_empty() {
                Err(perr(end_col, format!("{what} needs at least one block size")))
            } else {
                Ok(args.clone())
            }
        };
        if head.text == "input" {
            if expr.is_some() {
                return Err(perr(head.column, "input declared twice".into()));
            }
            expr = Some(NetworkExpr::new(single("input")?));
            continue;
        }
        let layer = match head.text {
            "cup" => Layer::Cup(single("cup")?),
            "cap" => Layer::Cap(single("cap")?),
            "proj" => Layer::Proj(list("proj")?),
            "incl" => Layer::Incl(list("incl")?),
            "jw" => Layer::Jw(list("jw")?),
            other => {
                return Err(perr(head.column, format!("unknown generator {other:?}")));
            }
        };
        let Some(e) = expr.as_mut() else {
            return Err(perr(head.column, "generator before the input line".into()));
        };
        e.push(layer, lineno)?;
    }
    expr.ok_or(Error::NetworkParse {
        line: last_line.max(1),
        column: last_col,
        message: "missing input line".into(),
    })
}

/// The matrix of a network: the ordered product of its layers.
pub fn eval_network(e: &NetworkExpr) -> Result<Intertwiner> {
    Intertwiner::from_fn(e.input_shape().clone(), e.output_shape().clone(), |v| e.apply(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::{qint, RationalQ};

    #[test]
    fn circle_program() {
        let e = parse_network("input 0\ncup 1\ncap 1\n").unwrap();
        let m = eval_network(&e).unwrap();
        assert_eq!(m.scalar().unwrap(), RationalQ::from_poly(-qint(2)));
    }

    #[test]
    fn comments_and_blank_lines() {
        let e = parse_network("# circle\n\ninput 0   # nothing yet\ncup 1\n  cap 1 # close\n").unwrap();
        assert_eq!(e.layers().count(), 2);
        assert_eq!(e.to_string(), "input 0\ncup 1\ncap 1\n");
    }

    #[test]
    fn parse_errors_report_position() {
        match parse_network("input 2\nfrob 1\n") {
            Err(Error::NetworkParse { line, column, .. }) => assert_eq!((line, column), (2, 1)),
            other => panic!("{other:?}"),
        }
        match parse_network("input 2\n  cap x\n") {
            Err(Error::NetworkParse { line, column, .. }) => assert_eq!((line, column), (2, 7)),
            other => panic!("{other:?}"),
        }
        match parse_network("cup 1\n") {
            Err(Error::NetworkParse { line, .. }) => assert_eq!(line, 1),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_network("# nothing\n"), Err(Error::NetworkParse { .. })));
        assert!(matches!(parse_network("input 1\ncap\n"), Err(Error::NetworkParse { .. })));
    }

    #[test]
    fn width_errors_name_the_layer() {
        match parse_network("input 2\ncap 1\ncap 1\n") {
            Err(Error::NetworkWidth { layer, line, generator, .. }) => {
                assert_eq!((layer, line), (2, 3));
                assert_eq!(generator, "cap 1");
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_network("input 3\nproj 1 1\n"),
            Err(Error::NetworkWidth { .. })
        ));
        assert!(matches!(
            parse_network("input 2\nproj 2\ncap 1\n"),
            Err(Error::NetworkWidth { .. })
        ));
    }

    #[test]
    fn idempotent_projector_program() {
        let once = eval_network(&parse_network("input 3\njw 3\n").unwrap()).unwrap();
        let twice = eval_network(&parse_network("input 3\njw 3\njw 3\n").unwrap()).unwrap();
        assert_eq!(once, twice);
    }
}
