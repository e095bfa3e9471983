use std::fmt::Write;

use passivize_core::{Explanation, NounPhrase, KERNEL};

fn element(np: &NounPhrase) -> String {
    match np.as_pronoun() {
        Some(p) => format!(
            "a^{} ({}, {} person {})",
            p.exponent, p.case_role, p.person, p.number
        ),
        None => format!("a^0 (identity, noun, {})", np.number),
    }
}

fn kernel_set() -> String {
    let cells: Vec<String> = KERNEL.iter().map(ToString::to_string).collect();
    format!("{{{}}}", cells.join(", "))
}

/// Multi-line dump of each step of the transformation.
pub fn render_explanation(input: &str, e: &Explanation) -> String {
    let clause = &e.clause;
    let verb = &clause.verb;
    let mut out = String::new();
    let _ = writeln!(out, "input:     {input}");
    let _ = writeln!(
        out,
        "subject:   {} = {}",
        clause.subject,
        element(&clause.subject)
    );
    let _ = writeln!(
        out,
        "verb:      {} = {} (tense {}, form {}), lemma \"{}\"",
        verb.tokens().join(" "),
        verb.form,
        verb.form.i(),
        verb.form.j(),
        verb.lemma
    );
    let _ = writeln!(
        out,
        "object:    {} = {}",
        clause.object,
        element(&clause.object)
    );
    if e.kernel {
        let _ = writeln!(
            out,
            "kernel:    {} in K = {}: no passive form",
            verb.form,
            kernel_set()
        );
        return out;
    }
    let _ = writeln!(out, "kernel:    {} not in K = {}", verb.form, kernel_set());
    if let (Some(promoted), Some(agent)) = (&e.promoted_subject, &e.agent) {
        let _ = writeln!(
            out,
            "inverse:   object^-1 = {} (a^{}), subject^-1 = {} (a^{})",
            promoted,
            promoted.exponent(),
            agent,
            agent.exponent()
        );
    }
    if let Some(passive) = &e.passive {
        let _ = writeln!(
            out,
            "core:      {} -> {}",
            verb.form,
            passive.core.join(" ")
        );
    }
    if let Some((class, aux)) = &e.agreement {
        let _ = writeln!(
            out,
            "agreement: A[{}, {}] = {}",
            verb.form,
            class,
            aux.join(" ")
        );
    }
    if let Some(passive) = &e.passive {
        let _ = writeln!(out, "passive:   {passive}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use passivize_core::Passivizer;

    #[test]
    fn worked_example_steps() {
        let engine = Passivizer::new();
        let input = "They are looking the movie.";
        let text = render_explanation(input, &engine.explain(input).unwrap());
        assert!(text.contains("subject:   they = a^6"), "{text}");
        assert!(text.contains("= v12 (tense 1, form 2)"), "{text}");
        assert!(text.contains("object:    the movie = a^0"), "{text}");
        assert!(text.contains("A[v12, noun-singular] = is"), "{text}");
        assert!(
            text.contains("passive:   The movie is being looked by them."),
            "{text}"
        );
    }

    #[test]
    fn kernel_stops_early() {
        let engine = Passivizer::new();
        let input = "He has been writing a letter.";
        let text = render_explanation(input, &engine.explain(input).unwrap());
        assert!(text.contains("v14 in K = {v14, v24, v32, v34}"), "{text}");
        assert!(!text.contains("passive:"));
        assert!(!text.contains("agreement:"));
    }

    #[test]
    fn noun_subject_is_identity() {
        let engine = Passivizer::new();
        let input = "The policeman has caught the thief.";
        let text = render_explanation(input, &engine.explain(input).unwrap());
        assert!(
            text.contains("subject:   the policeman = a^0 (identity"),
            "{text}"
        );
    }
}
