//! Canonical pretty-printer. Output always reparses to an AST equal to the
//! input modulo spans: fixed two-space indentation, one declaration per
//! line, LF line endings, normalized symbolic counts.

use crate::model::{
    strip, ClassDecl, Diagram, DiagramBody, ExerciseAssignment, FunctionExample, FunctionSpec,
    ObjectSnapshot, StateTransitionRules, TypeRef, ValueLiteral,
};

pub fn print(assignment: &ExerciseAssignment) -> String {
    let mut p = Printer {
        out: String::new(),
        indent: 0,
    };
    p.assignment(assignment);
    p.out
}

struct Printer {
    out: String,
    indent: usize,
}

impl Printer {
    fn line(&mut self, text: &str) {
        for _ in 0..self.indent {
            self.out.push_str("  ");
        }
        self.out.push_str(text);
        self.out.push('\n');
    }

    fn assignment(&mut self, a: &ExerciseAssignment) {
        self.line(&format!("assignment {} {{", quote(&a.id.node)));
        self.indent += 1;
        if let Some(title) = &a.title {
            self.line(&format!("title {}", quote(&title.node)));
        }
        let mut first = a.title.is_none();
        for diagram in &a.diagrams {
            if !first {
                self.out.push('\n');
            }
            first = false;
            self.diagram(diagram);
        }
        self.indent -= 1;
        self.line("}");
    }

    fn diagram(&mut self, d: &Diagram) {
        self.line(&format!("{} {} {{", d.body.kind_name(), quote(&d.id.node)));
        self.indent += 1;
        if let Some(note) = &d.note {
            self.line(&format!("note {}", quote(&note.node)));
        }
        match &d.body {
            DiagramBody::AlgorithmicFunction(spec) | DiagramBody::StateChangeFunction(spec) => {
                self.function_spec(spec)
            }
            DiagramBody::ClassDeclaration(classes) | DiagramBody::Inheritance(classes) => {
                for class in classes {
                    self.class_decl(class);
                }
            }
            DiagramBody::StateTransitionRules(rules) => self.transition_rules(rules),
        }
        self.indent -= 1;
        self.line("}");
    }

    fn function_spec(&mut self, spec: &FunctionSpec) {
        let params = spec
            .params
            .iter()
            .map(|p| type_text(&p.node))
            .collect::<Vec<_>>()
            .join(", ");
        let mut decl = format!("function {}({params})", spec.display_name.name);
        if let Some(ret) = &spec.return_type {
            decl.push_str(&format!(" returns {}", type_text(&ret.node)));
        }
        self.line(&decl);
        for example in &spec.examples {
            self.example(example);
        }
        if let Some(rule_ref) = &spec.rule_ref {
            self.line(&format!("rule_ref {}", quote(&rule_ref.target)));
        }
    }

    fn example(&mut self, e: &FunctionExample) {
        self.line("example {");
        self.indent += 1;
        if let Some(before) = &e.before {
            let list = before
                .iter()
                .map(snapshot_text)
                .collect::<Vec<_>>()
                .join(", ");
            self.line(&format!("before: {list}"));
        }
        let inputs = e
            .inputs
            .iter()
            .map(|v| self.input_text(v, e.before.as_deref()))
            .collect::<Vec<_>>();
        if inputs.is_empty() {
            self.line("in:");
        } else {
            self.line(&format!("in: {}", inputs.join(", ")));
        }
        if let Some(output) = &e.output {
            let star = if e.rule_marker.is_some() { " *" } else { "" };
            self.line(&format!("out: {}{star}", value_text(output)));
        }
        if let Some(after) = &e.after {
            let list = after
                .iter()
                .map(snapshot_text)
                .collect::<Vec<_>>()
                .join(", ");
            self.line(&format!("after: {list}"));
        }
        self.indent -= 1;
        self.line("}");
    }

    /// Inputs that repeat a `before:` snapshot print as `@k` references.
    fn input_text(&self, value: &ValueLiteral, before: Option<&[ObjectSnapshot]>) -> String {
        if let (ValueLiteral::Object(snapshot), Some(before)) = (value, before) {
            for (index, candidate) in before.iter().enumerate() {
                if strip::snapshot_eq_modulo_spans(snapshot, candidate) {
                    return format!("@{}", index + 1);
                }
            }
        }
        value_text(value)
    }

    fn class_decl(&mut self, class: &ClassDecl) {
        if class.attributes.is_empty() && class.constructors.is_empty() && class.methods.is_empty()
        {
            self.line(&format!("class {} {{}}", class.name.name));
            return;
        }
        self.line(&format!("class {} {{", class.name.name));
        self.indent += 1;
        for attr in &class.attributes {
            let mut line = format!("attr {}", attr.name.name);
            if let Some(ty) = &attr.ty {
                line.push_str(&format!(": {}", type_text(&ty.node)));
            }
            if attr.object_valued {
                line.push_str(" object");
            }
            self.line(&line);
        }
        for ctor in &class.constructors {
            let params = ctor
                .params
                .iter()
                .map(|p| type_text(&p.node))
                .collect::<Vec<_>>()
                .join(", ");
            self.line(&format!("ctor({params})"));
        }
        for method in &class.methods {
            if method.examples.is_empty() {
                self.line(&format!("method {} {{}}", method.name.name));
                continue;
            }
            self.line(&format!("method {} {{", method.name.name));
            self.indent += 1;
            for example in &method.examples {
                self.example(example);
            }
            self.indent -= 1;
            self.line("}");
        }
        self.indent -= 1;
        self.line("}");
    }

    fn transition_rules(&mut self, rules: &StateTransitionRules) {
        for state in &rules.states {
            if state.visible_fields.is_empty() {
                self.line(&format!("state {} {{}}", state.name.name));
            } else {
                let fields = state
                    .visible_fields
                    .iter()
                    .map(|f| f.name.clone())
                    .collect::<Vec<_>>()
                    .join(", ");
                self.line(&format!("state {} {{ {fields} }}", state.name.name));
            }
        }
        for transition in &rules.transitions {
            self.line(&format!(
                "transition {} -> {} on {}",
                transition.from.name,
                transition.to.name,
                quote(&transition.action.node)
            ));
        }
    }
}

fn quote(text: &str) -> String {
    let mut out = String::with_capacity(text.len() + 2);
    out.push('"');
    for c in text.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            other => out.push(other),
        }
    }
    out.push('"');
    out
}

fn type_text(ty: &TypeRef) -> String {
    ty.display()
}

pub(crate) fn value_text(value: &ValueLiteral) -> String {
    match value {
        ValueLiteral::Int { value, .. } => value.to_string(),
        ValueLiteral::Bool { value, .. } => value.to_string(),
        ValueLiteral::Text { value, .. } => quote(value),
        ValueLiteral::Array { elements, .. } => {
            let inner = elements
                .iter()
                .map(value_text)
                .collect::<Vec<_>>()
                .join(", ");
            format!("[{inner}]")
        }
        ValueLiteral::Object(snapshot) => snapshot_text(snapshot),
        ValueLiteral::SymbolicCount {
            base, offset, unit, ..
        } => match offset.signum() {
            0 => format!("{base} {}", quote(unit)),
            1 => format!("{base} + {offset} {}", quote(unit)),
            _ => format!("{base} - {} {}", -offset, quote(unit)),
        },
    }
}

fn snapshot_text(snapshot: &ObjectSnapshot) -> String {
    let mut out = snapshot.class_name.name.clone();
    if let Some(tag) = &snapshot.state_tag {
        out.push_str(&format!(" @ {}", tag.name));
    }
    if snapshot.fields.is_empty() {
        out.push_str(" {}");
    } else {
        let fields = snapshot
            .fields
            .iter()
            .map(|(name, value)| format!("{}: {}", name.name, value_text(value)))
            .collect::<Vec<_>>()
            .join(", ");
        out.push_str(&format!(" {{ {fields} }}"));
    }
    out
}
