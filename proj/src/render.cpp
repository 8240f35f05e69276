#include "detkit/render.hpp"

#include <json.hpp>

namespace detkit {

namespace {

std::string join_stage_blocks(const std::vector<std::string>& blocks) {
    std::string out;
    for (std::size_t k = 0; k < blocks.size(); ++k) {
        if (k > 0) out += "=>\n";
        out += blocks[k];
    }
    return out;
}

// The entry after an additive nudge, e.g. "1+2e" or "-3e".
std::string perturbed_entry(const Perturbation& p) {
    if (p.mode == PerturbMode::Replace) return "e";
    return EpsPolynomial(std::vector<BigRational>{p.original, BigRational(p.coeff)}).str();
}

std::string perturbation_lines(const std::vector<Perturbation>& perturbations) {
    std::string out;
    for (const auto& p : perturbations)
        out += "# entry (" + std::to_string(p.i) + "," + std::to_string(p.j) + "): " +
               p.original.str() + " -> " + perturbed_entry(p) + "\n";
    return out;
}

// Shared body for the two perturbed-run renderings: annotated header, the
// polynomial stage chain, the final polynomial in spaced form, then the
// restored value at the given point.
std::string eps_chain_text(const CondensationTrace& trace, const BigRational& point,
                           const BigRational& value) {
    std::string out = perturbation_lines(trace.perturbations);
    std::vector<std::string> blocks;
    for (std::size_t k = 0; k + 1 < trace.eps_stages.size(); ++k)
        blocks.push_back(render_matrix_block(trace.eps_stages[k]));
    blocks.push_back(trace.final_polynomial->str(PolyStyle::Spaced) + "\n");
    out += join_stage_blocks(blocks);
    out += "value at e=" + point.str() + ": " + value.str() + "\n";
    return out;
}

} // namespace

std::string render_matrix_block(const RationalMatrix& m) { return serialize_matrix(m); }

std::string render_matrix_block(const EpsMatrix& m) {
    std::string out;
    for (int i = 1; i <= m.order(); ++i) {
        for (int j = 1; j <= m.order(); ++j) {
            if (j > 1) out += " ";
            out += m.at(i, j).str();
        }
        out += "\n";
    }
    return out;
}

std::string render_dodgson_text(const DodgsonResult& result, bool with_trace) {
    if (!with_trace) return result.value.str() + "\n";
    const CondensationTrace& trace = result.trace;

    if (trace.final_polynomial)
        return eps_chain_text(trace, BigRational(0), result.value);

    std::string out;
    for (const auto& [axis, k] : trace.shifts_applied)
        out += axis == Axis::Rows ? "# rows rotated up by " + std::to_string(k) + "\n"
                                  : "# columns rotated left by " + std::to_string(k) + "\n";
    bool shifted = !trace.shifts_applied.empty();
    if (shifted) out += "# permutation sign: " + std::to_string(trace.permutation_sign) + "\n";

    std::vector<std::string> blocks;
    for (const auto& stage : trace.stages) blocks.push_back(render_matrix_block(stage));
    out += join_stage_blocks(blocks);
    if (shifted) out += "value: " + result.value.str() + "\n";
    return out;
}

std::string render_symbolic_text(const SymbolicResult& result, bool with_trace) {
    const BigRational& original = result.trace.perturbations.at(0).original;
    BigRational restored = result.polynomial.eval_at(original);
    if (!with_trace)
        return result.polynomial.str(PolyStyle::Spaced) + "\n" +
               "value at e=" + original.str() + ": " + restored.str() + "\n";
    return eps_chain_text(result.trace, original, restored);
}

std::string render_chio_text(const ChioResult& result, bool with_trace) {
    if (!with_trace) return result.value.str() + "\n";
    std::vector<std::string> blocks;
    for (const auto& stage : result.trace.stages) {
        std::string block = render_matrix_block(stage.matrix);
        if (stage.r > 0)
            block += "# pivot (" + std::to_string(stage.r) + "," + std::to_string(stage.s) +
                     ") = " + stage.pivot.str() + "\n";
        blocks.push_back(std::move(block));
    }
    blocks.push_back("Z=" + result.trace.final_z.str() + " divisor=" +
                     result.trace.divisor.str() + " value=" + result.value.str() + "\n");
    return join_stage_blocks(blocks);
}

std::string render_eval_json(const EvalOutcome& outcome) {
    using json = nlohmann::ordered_json;
    json doc;
    doc["value"] = outcome.value.str();
    doc["method"] = outcome.method;

    int sign = 1;
    json stages = json::array();
    json pivots = json::array();
    std::string divisor = "1";
    json perturbations = json::array();
    json eps_poly; // null

    auto matrix_to_json = [](const auto& m) {
        json rows = json::array();
        for (int i = 1; i <= m.order(); ++i) {
            json row = json::array();
            for (int j = 1; j <= m.order(); ++j) row.push_back(m.at(i, j).str());
            rows.push_back(std::move(row));
        }
        return rows;
    };

    if (outcome.condensation) {
        const CondensationTrace& t = *outcome.condensation;
        sign = t.permutation_sign;
        if (t.final_polynomial) {
            for (const auto& st : t.eps_stages) stages.push_back(matrix_to_json(st));
            eps_poly = t.final_polynomial->str();
        } else {
            for (const auto& st : t.stages) stages.push_back(matrix_to_json(st));
        }
        for (const auto& p : t.perturbations) {
            json rec;
            rec["i"] = p.i;
            rec["j"] = p.j;
            rec["original"] = p.original.str();
            rec["mode"] = p.mode == PerturbMode::Replace ? "replace" : "add";
            rec["coeff"] = p.coeff;
            perturbations.push_back(std::move(rec));
        }
    } else if (outcome.chio) {
        const ChioTrace& t = *outcome.chio;
        for (const auto& st : t.stages) {
            stages.push_back(matrix_to_json(st.matrix));
            if (st.r > 0) {
                json rec;
                rec["r"] = st.r;
                rec["s"] = st.s;
                rec["value"] = st.pivot.str();
                pivots.push_back(std::move(rec));
            }
        }
        divisor = t.divisor.str();
    }

    doc["permutation_sign"] = sign;
    doc["stages"] = std::move(stages);
    doc["pivots"] = std::move(pivots);
    doc["divisor"] = divisor;
    doc["perturbations"] = std::move(perturbations);
    doc["epsilon_polynomial"] = std::move(eps_poly);
    return doc.dump(2) + "\n";
}

} // namespace detkit
