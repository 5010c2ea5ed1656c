//! Recursive-descent parser. Fail-fast: the first violation aborts the parse
//! and no partial AST is returned.

use std::collections::BTreeSet;

use crate::model::{
    AttributeSpec, ClassDecl, ConstructorSpec, Diagram, DiagramBody, ExerciseAssignment,
    FunctionExample, FunctionSpec, Ident, MethodBehavior, ObjectSnapshot, RuleRef, SourceSpan,
    Spanned, StateDecl, StateTransitionRules, TransitionDecl, TypeRef, ValueLiteral,
};

use super::lexer::{Tok, Token};
use super::ParseError;

const DIAGRAM_KINDS: [&str; 5] = [
    "algorithmic",
    "state_change",
    "class",
    "inheritance",
    "state_transitions",
];

pub(super) struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    pub(super) fn new(tokens: Vec<Token>) -> Self {
        Parser { tokens, pos: 0 }
    }

    fn peek(&self) -> &Token {
        &self.tokens[self.pos.min(self.tokens.len() - 1)]
    }

    fn peek2(&self) -> &Tok {
        let idx = (self.pos + 1).min(self.tokens.len() - 1);
        &self.tokens[idx].tok
    }

    fn bump(&mut self) -> Token {
        let token = self.peek().clone();
        if self.pos < self.tokens.len() - 1 {
            self.pos += 1;
        }
        token
    }

    fn at(&self, tok: &Tok) -> bool {
        &self.peek().tok == tok
    }

    fn at_kw(&self, keyword: &str) -> bool {
        matches!(&self.peek().tok, Tok::Ident(name) if name == keyword)
    }

    /// Soft keyword followed by `:` — an example-body section header.
    fn at_section(&self, keyword: &str) -> bool {
        self.at_kw(keyword) && *self.peek2() == Tok::Colon
    }

    fn error(&self, expected: Vec<String>) -> ParseError {
        ParseError {
            span: self.peek().span.clone(),
            expected,
            found: self.peek().tok.describe(),
        }
    }

    fn error_at(
        &self,
        span: SourceSpan,
        expected: Vec<String>,
        found: impl Into<String>,
    ) -> ParseError {
        ParseError {
            span,
            expected,
            found: found.into(),
        }
    }

    fn expect(&mut self, tok: Tok, desc: &str) -> Result<Token, ParseError> {
        if self.at(&tok) {
            Ok(self.bump())
        } else {
            Err(self.error(vec![desc.to_string()]))
        }
    }

    fn expect_kw(&mut self, keyword: &str) -> Result<Token, ParseError> {
        if self.at_kw(keyword) {
            Ok(self.bump())
        } else {
            Err(self.error(vec![format!("`{keyword}`")]))
        }
    }

    fn expect_ident(&mut self, what: &str) -> Result<Ident, ParseError> {
        match &self.peek().tok {
            Tok::Ident(name) => {
                let name = name.clone();
                let token = self.bump();
                Ok(Ident::new(name, token.span))
            }
            _ => Err(self.error(vec![what.to_string()])),
        }
    }

    fn expect_string(&mut self, what: &str) -> Result<Spanned<String>, ParseError> {
        match &self.peek().tok {
            Tok::Str(value) => {
                let value = value.clone();
                let token = self.bump();
                Ok(Spanned::new(value, token.span))
            }
            _ => Err(self.error(vec![what.to_string()])),
        }
    }

    /// A quoted id: assignment ids, diagram ids and rule_ref targets.
    fn expect_id_string(&mut self, what: &str) -> Result<Spanned<String>, ParseError> {
        let s = self.expect_string(what)?;
        let valid = s.node.chars().next().is_some_and(|c| c.is_alphabetic())
            && s.node
                .chars()
                .all(|c| c.is_alphanumeric() || c == '_' || c == '-');
        if valid {
            Ok(s)
        } else {
            Err(self.error_at(
                s.span,
                vec![format!(
                    "{what} (a letter followed by letters, digits, `_` or `-`)"
                )],
                format!("`{}`", s.node),
            ))
        }
    }

    // ---- assignment & diagrams ----------------------------------------

    pub(super) fn assignment(&mut self) -> Result<ExerciseAssignment, ParseError> {
        let start = self.expect_kw("assignment")?;
        let id = self.expect_id_string("assignment id string")?;
        self.expect(Tok::LBrace, "`{`")?;
        let title = if self.at_kw("title") {
            self.bump();
            Some(self.expect_string("title string")?)
        } else {
            None
        };
        let mut diagrams = Vec::new();
        while !self.at(&Tok::RBrace) {
            diagrams.push(self.diagram()?);
        }
        let end = self.expect(Tok::RBrace, "`}`")?;
        if !self.at(&Tok::Eof) {
            return Err(self.error(vec!["end of input".into()]));
        }
        Ok(ExerciseAssignment {
            id,
            title,
            diagrams,
            span: start.span.merge(&end.span),
        })
    }

    fn diagram(&mut self) -> Result<Diagram, ParseError> {
        let kind = match &self.peek().tok {
            Tok::Ident(name) if DIAGRAM_KINDS.contains(&name.as_str()) => name.clone(),
            _ => {
                let mut expected: Vec<String> =
                    DIAGRAM_KINDS.iter().map(|k| format!("`{k}`")).collect();
                expected.push("`}`".into());
                return Err(self.error(expected));
            }
        };
        let start = self.bump();
        let id = self.expect_id_string("diagram id string")?;
        self.expect(Tok::LBrace, "`{`")?;
        let note = if self.at_kw("note") {
            self.bump();
            Some(self.expect_string("note string")?)
        } else {
            None
        };
        let body = match kind.as_str() {
            "algorithmic" => DiagramBody::AlgorithmicFunction(self.function_body()?),
            "state_change" => DiagramBody::StateChangeFunction(self.function_body()?),
            "class" => DiagramBody::ClassDeclaration(self.class_body()?),
            "inheritance" => DiagramBody::Inheritance(self.class_body()?),
            _ => DiagramBody::StateTransitionRules(self.state_transitions_body()?),
        };
        let end = self.expect(Tok::RBrace, "`}`")?;
        Ok(Diagram {
            id,
            note,
            body,
            span: start.span.merge(&end.span),
        })
    }

    // ---- function diagrams ---------------------------------------------

    fn function_body(&mut self) -> Result<FunctionSpec, ParseError> {
        let start = self.expect_kw("function")?;
        let display_name = self.expect_ident("function name")?;
        self.expect(Tok::LParen, "`(`")?;
        let mut params = Vec::new();
        if !self.at(&Tok::RParen) {
            loop {
                params.push(self.type_ref()?);
                if self.at(&Tok::Comma) {
                    self.bump();
                } else {
                    break;
                }
            }
        }
        let close = self.expect(Tok::RParen, "`)` or `,`")?;
        let return_type = if self.at_kw("returns") {
            self.bump();
            Some(self.type_ref()?)
        } else {
            None
        };
        if params.is_empty() && return_type.is_none() {
            return Err(self.error_at(
                close.span,
                vec!["at least one parameter or a `returns` clause".into()],
                format!("function `{}` with neither", display_name.name),
            ));
        }

        // Examples first, then the optional rule_ref (which starred outputs
        // point at), so markers are resolved after the body is read.
        let mut examples = Vec::new();
        let mut star_spans = Vec::new();
        while self.at_kw("example") {
            let (example, star) = self.example()?;
            examples.push(example);
            star_spans.push(star);
        }
        let rule_ref = if self.at_kw("rule_ref") {
            let kw = self.bump();
            let target = self.expect_id_string("rules diagram id string")?;
            Some(RuleRef {
                target: target.node,
                span: kw.span.merge(&target.span),
            })
        } else {
            None
        };
        for (example, star) in examples.iter_mut().zip(&star_spans) {
            if let Some(star_span) = star {
                match &rule_ref {
                    Some(rule_ref) => {
                        example.rule_marker = Some(RuleRef {
                            target: rule_ref.target.clone(),
                            span: star_span.clone(),
                        })
                    }
                    None => {
                        return Err(self.error_at(
                            star_span.clone(),
                            vec!["a `rule_ref` declaration in this diagram".into()],
                            "`*` marker without one",
                        ))
                    }
                }
            }
        }

        let end_span = self.peek().span.clone();
        Ok(FunctionSpec {
            display_name,
            params,
            return_type,
            examples,
            rule_ref,
            span: start.span.merge(&end_span),
        })
    }

    fn type_ref(&mut self) -> Result<Spanned<TypeRef>, ParseError> {
        let base = self.expect_ident("a type (`int`, `bool`, `text` or a class name)")?;
        let mut ty = match base.name.as_str() {
            "int" => TypeRef::Int,
            "bool" => TypeRef::Bool,
            "text" => TypeRef::Text,
            _ => TypeRef::Class(base.name.clone()),
        };
        let mut span = base.span;
        while self.at(&Tok::LBracket) {
            self.bump();
            let close = self.expect(Tok::RBracket, "`]`")?;
            ty = TypeRef::Array(Box::new(ty));
            span = span.merge(&close.span);
        }
        Ok(Spanned::new(ty, span))
    }

    /// Returns the example plus the span of its `*` marker, if any; the
    /// caller resolves markers once the diagram's rule_ref is known.
    fn example(&mut self) -> Result<(FunctionExample, Option<SourceSpan>), ParseError> {
        let start = self.expect_kw("example")?;
        self.expect(Tok::LBrace, "`{`")?;

        let before = if self.at_section("before") {
            self.bump();
            self.bump();
            Some(self.snapshot_list()?)
        } else {
            None
        };

        if !self.at_section("in") {
            return Err(self.error(vec!["`in:`".into()]));
        }
        self.bump();
        self.bump();
        let mut inputs = Vec::new();
        if self.starts_value() {
            loop {
                inputs.push(self.value(before.as_deref())?);
                if self.at(&Tok::Comma) {
                    self.bump();
                } else {
                    break;
                }
            }
        }

        let mut output = None;
        let mut star = None;
        if self.at_section("out") {
            self.bump();
            self.bump();
            output = Some(self.value(None)?);
            if self.at(&Tok::Star) {
                star = Some(self.bump().span);
            }
        }

        let after = if self.at_section("after") {
            self.bump();
            self.bump();
            Some(self.snapshot_list()?)
        } else {
            None
        };

        let end = self.expect(Tok::RBrace, "`}`")?;
        Ok((
            FunctionExample {
                before,
                inputs,
                output,
                rule_marker: None,
                after,
                span: start.span.merge(&end.span),
            },
            star,
        ))
    }

    fn snapshot_list(&mut self) -> Result<Vec<ObjectSnapshot>, ParseError> {
        let mut snapshots = vec![self.snapshot()?];
        while self.at(&Tok::Comma) {
            self.bump();
            snapshots.push(self.snapshot()?);
        }
        Ok(snapshots)
    }

    // ---- values ----------------------------------------------------------

    /// Lookahead: does the next token start a value? Identifiers only
    /// qualify when followed by something a snapshot or symbolic count
    /// continues with, so section headers like `out:` are never consumed.
    fn starts_value(&self) -> bool {
        match &self.peek().tok {
            Tok::Int(_) | Tok::Str(_) | Tok::LBracket | Tok::Minus | Tok::At => true,
            Tok::Ident(name) if name == "true" || name == "false" => true,
            Tok::Ident(_) => {
                matches!(
                    self.peek2(),
                    Tok::LBrace | Tok::At | Tok::Plus | Tok::Minus | Tok::Str(_)
                )
            }
            _ => false,
        }
    }

    /// `before`, when given, enables `@k` references to the k-th before
    /// snapshot (top-level example inputs only).
    fn value(&mut self, before: Option<&[ObjectSnapshot]>) -> Result<ValueLiteral, ParseError> {
        match &self.peek().tok {
            Tok::Int(value) => {
                let value = *value;
                let token = self.bump();
                Ok(ValueLiteral::Int {
                    value,
                    span: token.span,
                })
            }
            Tok::Minus => {
                let minus = self.bump();
                match &self.peek().tok {
                    Tok::Int(value) => {
                        let value = -*value;
                        let token = self.bump();
                        Ok(ValueLiteral::Int {
                            value,
                            span: minus.span.merge(&token.span),
                        })
                    }
                    _ => Err(self.error(vec!["an integer".into()])),
                }
            }
            Tok::Str(value) => {
                let value = value.clone();
                let token = self.bump();
                Ok(ValueLiteral::Text {
                    value,
                    span: token.span,
                })
            }
            Tok::LBracket => {
                let open = self.bump();
                let mut elements = Vec::new();
                if !self.at(&Tok::RBracket) {
                    loop {
                        elements.push(self.value(None)?);
                        if self.at(&Tok::Comma) {
                            self.bump();
                        } else {
                            break;
                        }
                    }
                }
                let close = self.expect(Tok::RBracket, "`]` or `,`")?;
                Ok(ValueLiteral::Array {
                    elements,
                    span: open.span.merge(&close.span),
                })
            }
            Tok::At => {
                let at = self.bump();
                let Some(before) = before else {
                    return Err(self.error_at(
                        at.span,
                        vec!["a literal value (`@k` references require a `before:` list)".into()],
                        "`@` reference",
                    ));
                };
                match &self.peek().tok {
                    Tok::Int(k) => {
                        let k = *k;
                        let token = self.bump();
                        let span = at.span.merge(&token.span);
                        if k < 1 || k as usize > before.len() {
                            return Err(self.error_at(
                                span,
                                vec![format!("a reference between @1 and @{}", before.len())],
                                format!("`@{k}`"),
                            ));
                        }
                        Ok(ValueLiteral::Object(before[(k - 1) as usize].clone()))
                    }
                    _ => Err(self.error(vec!["a 1-based snapshot index".into()])),
                }
            }
            Tok::Ident(name) if name == "true" || name == "false" => {
                let value = name == "true";
                let token = self.bump();
                Ok(ValueLiteral::Bool {
                    value,
                    span: token.span,
                })
            }
            Tok::Ident(_) => match self.peek2() {
                Tok::LBrace | Tok::At => Ok(ValueLiteral::Object(self.snapshot()?)),
                Tok::Plus | Tok::Minus | Tok::Str(_) => self.symbolic_count(),
                _ => Err(self.error(vec![
                    "an object snapshot (`Class { ... }`)".into(),
                    "a symbolic count (`N + 1 \"unit\"`)".into(),
                ])),
            },
            _ => Err(self.error(vec![
                "an integer".into(),
                "`true` or `false`".into(),
                "a string".into(),
                "`[`".into(),
                "an object snapshot".into(),
                "a symbolic count".into(),
            ])),
        }
    }

    fn symbolic_count(&mut self) -> Result<ValueLiteral, ParseError> {
        let base = self.expect_ident("a symbolic count base")?;
        if base.name.chars().count() != 1 || !base.name.chars().next().unwrap().is_alphabetic() {
            return Err(self.error_at(
                base.span,
                vec!["a single-letter symbolic count base".into()],
                format!("`{}`", base.name),
            ));
        }
        let offset = match &self.peek().tok {
            Tok::Plus => {
                self.bump();
                match &self.peek().tok {
                    Tok::Int(n) => {
                        let n = *n;
                        self.bump();
                        n
                    }
                    _ => return Err(self.error(vec!["an integer offset".into()])),
                }
            }
            Tok::Minus => {
                self.bump();
                match &self.peek().tok {
                    Tok::Int(n) => {
                        let n = -*n;
                        self.bump();
                        n
                    }
                    _ => return Err(self.error(vec!["an integer offset".into()])),
                }
            }
            _ => 0,
        };
        let unit = self.expect_string("a quoted unit")?;
        if unit.node.is_empty() {
            return Err(self.error_at(unit.span, vec!["a non-empty unit".into()], "empty string"));
        }
        let span = base.span.merge(&unit.span);
        Ok(ValueLiteral::SymbolicCount {
            base: base.name,
            offset,
            unit: unit.node,
            span,
        })
    }

    fn snapshot(&mut self) -> Result<ObjectSnapshot, ParseError> {
        let class_name = self.expect_ident("a class name")?;
        let state_tag = if self.at(&Tok::At) {
            self.bump();
            Some(self.expect_ident("a state name")?)
        } else {
            None
        };
        self.expect(Tok::LBrace, "`{`")?;
        let mut fields: Vec<(Ident, ValueLiteral)> = Vec::new();
        let mut seen = BTreeSet::new();
        if !self.at(&Tok::RBrace) {
            loop {
                let name = self.expect_ident("a field name")?;
                if !seen.insert(name.name.clone()) {
                    return Err(self.error_at(
                        name.span,
                        vec!["a unique field name".into()],
                        format!("duplicate field `{}`", name.name),
                    ));
                }
                self.expect(Tok::Colon, "`:`")?;
                let value = self.value(None)?;
                fields.push((name, value));
                if self.at(&Tok::Comma) {
                    self.bump();
                } else {
                    break;
                }
            }
        }
        let end = self.expect(Tok::RBrace, "`}` or `,`")?;
        let span = class_name.span.merge(&end.span);
        Ok(ObjectSnapshot {
            class_name,
            state_tag,
            fields,
            span,
        })
    }

    // ---- class diagrams --------------------------------------------------

    fn class_body(&mut self) -> Result<Vec<ClassDecl>, ParseError> {
        let mut classes = Vec::new();
        while self.at_kw("class") {
            classes.push(self.class_decl()?);
        }
        if classes.is_empty() {
            return Err(self.error(vec!["at least one `class` declaration".into()]));
        }
        Ok(classes)
    }

    fn class_decl(&mut self) -> Result<ClassDecl, ParseError> {
        let start = self.expect_kw("class")?;
        let name = self.expect_ident("a class name")?;
        self.expect(Tok::LBrace, "`{`")?;
        let mut attributes: Vec<AttributeSpec> = Vec::new();
        let mut constructors = Vec::new();
        let mut methods = Vec::new();
        let mut seen_attrs = BTreeSet::new();
        loop {
            if self.at_kw("attr") {
                let kw = self.bump();
                let attr_name = self.expect_ident("an attribute name")?;
                if !seen_attrs.insert(attr_name.name.clone()) {
                    return Err(self.error_at(
                        attr_name.span,
                        vec!["a unique attribute name".into()],
                        format!("duplicate attribute `{}`", attr_name.name),
                    ));
                }
                let ty = if self.at(&Tok::Colon) {
                    self.bump();
                    Some(self.type_ref()?)
                } else {
                    None
                };
                let object_valued = if self.at_kw("object") {
                    self.bump();
                    true
                } else {
                    false
                };
                let span = kw.span.merge(&attr_name.span);
                attributes.push(AttributeSpec {
                    name: attr_name,
                    ty,
                    object_valued,
                    span,
                });
            } else if self.at_kw("ctor") {
                let kw = self.bump();
                self.expect(Tok::LParen, "`(`")?;
                let mut params = Vec::new();
                if !self.at(&Tok::RParen) {
                    loop {
                        params.push(self.type_ref()?);
                        if self.at(&Tok::Comma) {
                            self.bump();
                        } else {
                            break;
                        }
                    }
                }
                let close = self.expect(Tok::RParen, "`)` or `,`")?;
                constructors.push(ConstructorSpec {
                    params,
                    span: kw.span.merge(&close.span),
                });
            } else if self.at_kw("method") {
                let kw = self.bump();
                let method_name = self.expect_ident("a method name")?;
                self.expect(Tok::LBrace, "`{`")?;
                let mut examples = Vec::new();
                while self.at_kw("example") {
                    let (example, star) = self.example()?;
                    if let Some(star_span) = star {
                        return Err(self.error_at(
                            star_span,
                            vec![
                                "no `*` marker (method examples cannot reference rules diagrams)"
                                    .into(),
                            ],
                            "`*` marker",
                        ));
                    }
                    examples.push(example);
                }
                let close = self.expect(Tok::RBrace, "`}`")?;
                methods.push(MethodBehavior {
                    name: method_name,
                    examples,
                    span: kw.span.merge(&close.span),
                });
            } else {
                break;
            }
        }
        let end = self.expect(Tok::RBrace, "`attr`, `ctor`, `method` or `}`")?;
        Ok(ClassDecl {
            name,
            attributes,
            constructors,
            methods,
            span: start.span.merge(&end.span),
        })
    }

    // ---- state transition diagrams ----------------------------------------

    fn state_transitions_body(&mut self) -> Result<StateTransitionRules, ParseError> {
        let start_span = self.peek().span.clone();
        let mut states = Vec::new();
        while self.at_kw("state") {
            let kw = self.bump();
            let name = self.expect_ident("a state name")?;
            self.expect(Tok::LBrace, "`{`")?;
            let mut visible_fields = Vec::new();
            if !self.at(&Tok::RBrace) {
                loop {
                    visible_fields.push(self.expect_ident("a field name")?);
                    if self.at(&Tok::Comma) {
                        self.bump();
                    } else {
                        break;
                    }
                }
            }
            let end = self.expect(Tok::RBrace, "`}` or `,`")?;
            states.push(StateDecl {
                name,
                visible_fields,
                span: kw.span.merge(&end.span),
            });
        }
        if states.is_empty() {
            return Err(self.error(vec!["at least one `state` declaration".into()]));
        }
        let mut transitions = Vec::new();
        while self.at_kw("transition") {
            let kw = self.bump();
            let from = self.expect_ident("a source state name")?;
            self.expect(Tok::Arrow, "`->`")?;
            let to = self.expect_ident("a target state name")?;
            self.expect_kw("on")?;
            let action = self.expect_string("a quoted action name")?;
            let is_ident = action
                .node
                .chars()
                .next()
                .is_some_and(|c| c.is_alphabetic())
                && action.node.chars().all(|c| c.is_alphanumeric() || c == '_');
            if !is_ident {
                return Err(self.error_at(
                    action.span,
                    vec!["an action identifier".into()],
                    format!("`{}`", action.node),
                ));
            }
            let span = kw.span.merge(&action.span);
            transitions.push(TransitionDecl {
                from,
                to,
                action,
                span,
            });
        }
        let end_span = self.peek().span.clone();
        Ok(StateTransitionRules {
            states,
            transitions,
            span: start_span.merge(&end_span),
        })
    }
}
