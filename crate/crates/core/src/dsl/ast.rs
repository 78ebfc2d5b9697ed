use std::fmt;

/// Source position of a node, 1-based.
///
/// Spans are metadata: any two spans compare equal, so ASTs compare
/// structurally.
#[derive(Debug, Clone, Copy, Default, Eq)]
pub struct Span {
    pub line: usize,
    pub column: usize,
}

impl Span {
    pub const fn new(line: usize, column: usize) -> Self {
        Self { line, column }
    }
}

impl PartialEq for Span {
    fn eq(&self, _: &Self) -> bool {
        true
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Ast {
    pub statements: Vec<Stmt>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Stmt {
    Let {
        name: String,
        expr: Expr,
        span: Span,
    },
    Assert {
        left: MExpr,
        right: MExpr,
        tol: f64,
        span: Span,
    },
}

/// A figure-valued expression.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Constructor {
        name: String,
        args: Vec<Arg>,
        span: Span,
    },
    Transform {
        name: String,
        target: Box<Expr>,
        args: Vec<Arg>,
        span: Span,
    },
    Reference {
        name: String,
        span: Span,
    },
}

impl Expr {
    pub fn span(&self) -> Span {
        match self {
            Expr::Constructor { span, .. }
            | Expr::Transform { span, .. }
            | Expr::Reference { span, .. } => *span,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Arg {
    pub name: Option<String>,
    pub value: ArgValue,
}

#[derive(Debug, Clone, PartialEq)]
pub enum ArgValue {
    Figure(Expr),
    Number(MExpr),
    Point(Vec<MExpr>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MeasureKind {
    Area,
    Volume,
    Surface,
    LateralArea,
    Perimeter,
    CentroidRho,
}

impl MeasureKind {
    pub fn from_keyword(k: &str) -> Option<Self> {
        Some(match k {
            "area" => MeasureKind::Area,
            "volume" => MeasureKind::Volume,
            "surface" => MeasureKind::Surface,
            "lateral_area" => MeasureKind::LateralArea,
            "perimeter" => MeasureKind::Perimeter,
            "centroid_rho" => MeasureKind::CentroidRho,
            _ => return None,
        })
    }

    pub fn keyword(&self) -> &'static str {
        match self {
            MeasureKind::Area => "area",
            MeasureKind::Volume => "volume",
            MeasureKind::Surface => "surface",
            MeasureKind::LateralArea => "lateral_area",
            MeasureKind::Perimeter => "perimeter",
            MeasureKind::CentroidRho => "centroid_rho",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl BinOp {
    pub fn symbol(&self) -> &'static str {
        match self {
            BinOp::Add => "+",
            BinOp::Sub => "-",
            BinOp::Mul => "*",
            BinOp::Div => "/",
        }
    }
}

/// A number-valued expression.
#[derive(Debug, Clone, PartialEq)]
pub enum MExpr {
    Number(f64),
    Pi,
    Neg(Box<MExpr>),
    Binary {
        op: BinOp,
        lhs: Box<MExpr>,
        rhs: Box<MExpr>,
    },
    Measure {
        kind: MeasureKind,
        target: Box<Expr>,
        span: Span,
    },
}

// Pretty printing. Binary nodes are fully parenthesized so that printing
// then parsing reproduces the same tree.

impl fmt::Display for Ast {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.statements {
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}

impl fmt::Display for Stmt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Stmt::Let { name, expr, .. } => write!(f, "let {name} = {expr};"),
            Stmt::Assert {
                left, right, tol, ..
            } => write!(f, "assert_close({left}, {right}, tol={tol:?});"),
        }
    }
}

fn write_args(f: &mut fmt::Formatter<'_>, args: &[Arg], mut first: bool) -> fmt::Result {
    for a in args {
        if !first {
            f.write_str(", ")?;
        }
        first = false;
        if let Some(n) = &a.name {
            write!(f, "{n}=")?;
        }
        write!(f, "{}", a.value)?;
    }
    Ok(())
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Constructor { name, args, .. } => {
                write!(f, "{name}(")?;
                write_args(f, args, true)?;
                f.write_str(")")
            }
            Expr::Transform {
                name, target, args, ..
            } => {
                write!(f, "{name}({target}")?;
                write_args(f, args, false)?;
                f.write_str(")")
            }
            Expr::Reference { name, .. } => f.write_str(name),
        }
    }
}

impl fmt::Display for ArgValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArgValue::Figure(e) => write!(f, "{e}"),
            ArgValue::Number(m) => write!(f, "{m}"),
            ArgValue::Point(coords) => {
                f.write_str("(")?;
                for (i, c) in coords.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{c}")?;
                }
                f.write_str(")")
            }
        }
    }
}

impl fmt::Display for MExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MExpr::Number(v) => write!(f, "{v:?}"),
            MExpr::Pi => f.write_str("pi"),
            MExpr::Neg(inner) => write!(f, "-{inner}"),
            MExpr::Binary { op, lhs, rhs } => write!(f, "({lhs} {} {rhs})", op.symbol()),
            MExpr::Measure { kind, target, .. } => write!(f, "{}({target})", kind.keyword()),
        }
    }
}
