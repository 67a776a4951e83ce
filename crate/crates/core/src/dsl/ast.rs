/// Source position of a token: 1-based line and column, length in characters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Span {
    pub line: usize,
    pub col: usize,
    pub len: usize,
}

/// A node with its source position. Equality ignores the position.
#[derive(Debug, Clone)]
pub struct Spanned<T> {
    pub node: T,
    pub span: Span,
}

impl<T: PartialEq> PartialEq for Spanned<T> {
    fn eq(&self, other: &Self) -> bool {
        self.node == other.node
    }
}

impl<T: Eq> Eq for Spanned<T> {}

impl<T> Spanned<T> {
    pub fn new(node: T, span: Span) -> Self {
        Spanned { node, span }
    }
}

pub type Ident = Spanned<String>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CarrierExpr {
    Call {
        name: Ident,
        args: Vec<Spanned<i64>>,
    },
    /// `a x b`, left associative.
    Product(Box<CarrierExpr>, Box<CarrierExpr>),
}

impl CarrierExpr {
    pub fn span(&self) -> Span {
        match self {
            CarrierExpr::Call { name, .. } => name.span,
            CarrierExpr::Product(a, _) => a.span(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Int(i64),
    Matrix(Vec<Vec<i64>>),
    Ident(String),
}

impl Value {
    pub fn type_name(&self) -> &'static str {
        match self {
            Value::Int(_) => "integer",
            Value::Matrix(_) => "matrix literal",
            Value::Ident(_) => "identifier",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedArg {
    pub name: Ident,
    pub value: Spanned<Value>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpDecl {
    pub name: Ident,
    pub ctor: Ident,
    pub args: Vec<NamedArg>,
}

impl OpDecl {
    pub fn arg(&self, name: &str) -> Option<&NamedArg> {
        self.args.iter().find(|a| a.name.node == name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckDecl {
    pub check: Ident,
    pub ops: Vec<Ident>,
}

/// A parsed and validated document. Equality ignores positions, the origin
/// and warnings.
#[derive(Debug, Clone)]
pub struct SpecDraft {
    pub origin: String,
    pub carrier: CarrierExpr,
    pub ops: Vec<OpDecl>,
    pub checks: Vec<CheckDecl>,
    pub warnings: Vec<super::Diagnostic>,
}

impl PartialEq for SpecDraft {
    fn eq(&self, other: &Self) -> bool {
        self.carrier == other.carrier && self.ops == other.ops && self.checks == other.checks
    }
}

impl Eq for SpecDraft {}
