#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dmt/conn_hom.hpp"
#include "dmt/io.hpp"
#include "dmt/mfc.hpp"
#include "dmt/morse_complex.hpp"
#include "dmt/transition.hpp"

using namespace dmt;

namespace {

SimplicialComplex load_complex(const std::string& path) {
    try {
        return parse_complex_file(read_file(path));
    } catch (const ParseError& e) {
        throw BuildError(path + ": " + e.what());
    }
}

FieldFile load_field_file(const std::string& path) {
    try {
        return parse_field_file(read_file(path));
    } catch (const ParseError& e) {
        throw BuildError(path + ": " + e.what());
    }
}

const char* yn(bool b) { return b ? "yes" : "no"; }

std::string term_sum(const SimplicialComplex& K, const std::vector<SimplexId>& basis,
                     const std::vector<long long>& coeffs) {
    std::string out;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        if (!out.empty()) out += " + ";
        if (coeffs[i] == -1)
            out += "-";
        else if (coeffs[i] != 1)
            out += std::to_string(coeffs[i]) + "*";
        out += K.simplex(basis[i]).label;
    }
    return out.empty() ? "0" : out;
}

void print_labels(std::ostringstream& os, const char* key, const SimplicialComplex& K,
                  const std::vector<SimplexId>& ids) {
    os << key << ":";
    for (SimplexId s : ids) os << ' ' << K.simplex(s).label;
    os << "\n";
}

void print_matrix(std::ostringstream& os, const IntMat& m) {
    os << "matrix:\n";
    for (int r = 0; r < m.rows(); ++r) {
        os << " ";
        for (int c = 0; c < m.cols(); ++c) os << ' ' << m.at(r, c);
        os << "\n";
    }
}

std::string pair_label(const SimplicialComplex& K, SimplexId a, SimplexId b) {
    return "(" + K.simplex(a).label + "," + K.simplex(b).label + ")";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "discrete Morse theory toolkit: gradient fields, Morse complexes, connectedness "
        "homomorphisms, birth-death transitions, and the complex of discrete Morse functions"};
    app.require_subcommand(1);

    std::string complex_path, ring_str = "z2", out_path, dot_path;
    std::vector<std::string> field_paths, pair_labels;
    int size_guard = 24;

    auto add_common = [&](CLI::App* cmd, bool fields) {
        cmd->add_option("--complex", complex_path, "complex description file")->required();
        if (fields)
            cmd->add_option("--field", field_paths,
                            "field or function description file (repeatable)");
        cmd->add_option("--ring", ring_str, "coefficient ring")
            ->check(CLI::IsMember({"z2", "z"}));
        cmd->add_option("--out", out_path, "write the output here instead of stdout");
    };

    CLI::App* c_validate = app.add_subcommand("validate", "check a complex and its fields / functions");
    add_common(c_validate, true);
    CLI::App* c_critical = app.add_subcommand("critical", "critical simplices of a field");
    add_common(c_critical, true);
    CLI::App* c_boundary = app.add_subcommand("boundary", "Morse boundary matrices");
    add_common(c_boundary, true);
    CLI::App* c_homology = app.add_subcommand("homology", "Morse homology of a field");
    add_common(c_homology, true);
    CLI::App* c_hom = app.add_subcommand("hom", "connectedness homomorphism between two fields");
    add_common(c_hom, true);
    CLI::App* c_chainmap = app.add_subcommand("chainmap", "is the connectedness homomorphism a chain map");
    add_common(c_chainmap, true);
    CLI::App* c_faithful = app.add_subcommand("faithful", "is the connectedness homomorphism faithful");
    add_common(c_faithful, true);
    CLI::App* c_transition = app.add_subcommand("transition", "detect a birth-death transition");
    add_common(c_transition, true);
    CLI::App* c_cancel = app.add_subcommand("cancel", "cancel a critical pair and write the new field");
    add_common(c_cancel, true);
    c_cancel->add_option("--pair", pair_labels, "labels of the critical pair: sigma alpha")
        ->expected(2)
        ->required();
    CLI::App* c_sequence = app.add_subcommand("sequence", "verify a transition sequence of fields");
    add_common(c_sequence, true);
    CLI::App* c_mfc = app.add_subcommand("mfc", "complex of discrete Morse functions");
    add_common(c_mfc, false);
    c_mfc->add_option("--dot", dot_path, "write the 1-skeleton in DOT format here");
    c_mfc->add_option("--size-guard", size_guard, "refuse more primitive fields than this");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    Ring ring = ring_str == "z" ? Ring::integers : Ring::mod2;
    std::ostringstream os;
    bool out_done = false;  // the subcommand consumed --out itself
    int code = 0;

    auto need_fields = [&](size_t n) {
        if (field_paths.size() != n)
            throw BuildError("expected exactly " + std::to_string(n) + " --field argument(s), got " +
                             std::to_string(field_paths.size()));
    };
    auto field_or_empty = [&](const SimplicialComplex& K) {
        if (field_paths.size() > 1) throw BuildError("expected at most one --field argument");
        if (field_paths.empty()) return GradientField::empty(K);
        return resolve_field(K, load_field_file(field_paths[0]));
    };

    try {
        if (app.got_subcommand(c_validate)) {
            SimplicialComplex K = load_complex(complex_path);
            os << "command: validate\ncomplex: " << complex_path << "\n";
            os << "simplices:";
            for (int d = 0; d <= K.dim(); ++d) os << ' ' << K.count(d);
            os << "\n";
            bool all_ok = true;
            for (const std::string& path : field_paths) {
                FieldFile file = load_field_file(path);
                os << "field: " << path << "\n";
                os << "kind: " << (file.is_function ? "function" : "pairs") << "\n";
                std::vector<Violation> bad;
                if (file.is_function)
                    bad = validate_morse_function(K, resolve_function(K, file));
                else
                    bad = validate_gradient_field(K, resolve_pairs(K, file));
                for (const Violation& v : bad)
                    os << "violation: " << K.simplex(v.simplex).label << ": " << v.detail << "\n";
                os << "valid: " << yn(bad.empty()) << "\n";
                all_ok = all_ok && bad.empty();
            }
            os << "validate: " << (all_ok ? "ok" : "violations found") << "\n";
            code = all_ok ? 0 : 1;

        } else if (app.got_subcommand(c_critical)) {
            SimplicialComplex K = load_complex(complex_path);
            GradientField V = field_or_empty(K);
            os << "command: critical\n";
            os << "pairs: " << V.pairs().size() << "\n";
            for (int d = 0; d <= K.dim(); ++d) {
                std::vector<SimplexId> cr = V.critical(K, d);
                os << "critical[" << d << "]: " << cr.size();
                print_labels(os, "", K, cr);
            }
            os << "optimal: " << yn(is_optimal(K, V)) << "\n";

        } else if (app.got_subcommand(c_boundary)) {
            SimplicialComplex K = load_complex(complex_path);
            GradientField V = field_or_empty(K);
            MorseComplexData data = build_morse_complex(K, V, ring);
            os << "command: boundary\nring: " << ring_name(ring) << "\n";
            for (int q = 0; q <= data.top_dim(); ++q) {
                os << "dim: " << q << "\n";
                print_labels(os, "cols", K, data.basis[static_cast<size_t>(q)]);
                print_labels(os, "rows", K,
                             q > 0 ? data.basis[static_cast<size_t>(q) - 1]
                                   : std::vector<SimplexId>{});
                print_matrix(os, data.boundary[static_cast<size_t>(q)]);
                if (q > 0)
                    for (size_t c = 0; c < data.basis[static_cast<size_t>(q)].size(); ++c)
                        os << "d" << q << " "
                           << K.simplex(data.basis[static_cast<size_t>(q)][c]).label << " -> "
                           << term_sum(K, data.basis[static_cast<size_t>(q) - 1],
                                       data.boundary[static_cast<size_t>(q)].column(
                                           static_cast<int>(c)))
                           << "\n";
            }
            os << "boundary: ok\n";

        } else if (app.got_subcommand(c_homology)) {
            SimplicialComplex K = load_complex(complex_path);
            GradientField V = field_or_empty(K);
            MorseComplexData data = build_morse_complex(K, V, ring);
            std::vector<DimHomology> hom = morse_homology(data);
            os << "command: homology\nring: " << ring_name(ring) << "\n";
            for (size_t q = 0; q < hom.size(); ++q) {
                os << "h" << q << ": " << hom[q].betti;
                if (!hom[q].torsion.empty()) {
                    os << " torsion:";
                    for (long long t : hom[q].torsion) os << ' ' << t;
                }
                os << "\n";
            }
            os << "optimal: " << yn(is_optimal(K, V)) << "\n";

        } else if (app.got_subcommand(c_hom)) {
            SimplicialComplex K = load_complex(complex_path);
            need_fields(2);
            GradientField V1 = resolve_field(K, load_field_file(field_paths[0]));
            GradientField V2 = resolve_field(K, load_field_file(field_paths[1]));
            ConnHom h = build_conn_hom(K, V1, V2, ring);
            os << "command: hom\nring: " << ring_name(ring) << "\n";
            for (int q = 0; q <= h.top_dim(); ++q) {
                os << "dim: " << q << "\n";
                print_labels(os, "cols", K, h.src_basis[static_cast<size_t>(q)]);
                print_labels(os, "rows", K, h.tgt_basis[static_cast<size_t>(q)]);
                print_matrix(os, h.matrices[static_cast<size_t>(q)]);
                for (size_t c = 0; c < h.src_basis[static_cast<size_t>(q)].size(); ++c)
                    os << "h" << q << " " << K.simplex(h.src_basis[static_cast<size_t>(q)][c]).label
                       << " -> "
                       << term_sum(K, h.tgt_basis[static_cast<size_t>(q)],
                                   h.matrices[static_cast<size_t>(q)].column(static_cast<int>(c)))
                       << "\n";
            }
            os << "hom: computed\n";

        } else if (app.got_subcommand(c_chainmap)) {
            SimplicialComplex K = load_complex(complex_path);
            need_fields(2);
            GradientField V1 = resolve_field(K, load_field_file(field_paths[0]));
            GradientField V2 = resolve_field(K, load_field_file(field_paths[1]));
            ConnHom h = build_conn_hom(K, V1, V2, ring);
            MorseComplexData d1 = build_morse_complex(K, V1, ring);
            MorseComplexData d2 = build_morse_complex(K, V2, ring);
            ChainMapReport rep = is_chain_map(h, d1, d2);
            os << "command: chainmap\nring: " << ring_name(ring) << "\n";
            if (!rep.ok) {
                os << "failure_dim: " << rep.dim << "\n";
                os << "failure_simplex: " << K.simplex(rep.simplex).label << "\n";
            }
            os << "chainmap: " << yn(rep.ok) << "\n";
            code = rep.ok ? 0 : 1;

        } else if (app.got_subcommand(c_faithful)) {
            SimplicialComplex K = load_complex(complex_path);
            need_fields(2);
            GradientField V1 = resolve_field(K, load_field_file(field_paths[0]));
            GradientField V2 = resolve_field(K, load_field_file(field_paths[1]));
            ConnHom h = build_conn_hom(K, V1, V2, ring);
            MorseComplexData d1 = build_morse_complex(K, V1, ring);
            MorseComplexData d2 = build_morse_complex(K, V2, ring);
            FaithfulReport rep = is_faithful(h, d1, d2);
            os << "command: faithful\nring: " << ring_name(ring) << "\n";
            for (size_t q = 0; q < rep.per_dim.size(); ++q)
                os << "dim " << q << ": " << (rep.per_dim[q] ? "faithful" : "not faithful") << "\n";
            if (!rep.ok) {
                os << "failure_dim: " << rep.dim << "\n";
                os << "failure_simplex: " << K.simplex(rep.simplex).label << "\n";
            }
            os << "faithful: " << yn(rep.ok) << "\n";
            code = rep.ok ? 0 : 1;

        } else if (app.got_subcommand(c_transition)) {
            SimplicialComplex K = load_complex(complex_path);
            need_fields(2);
            GradientField V1 = resolve_field(K, load_field_file(field_paths[0]));
            GradientField V2 = resolve_field(K, load_field_file(field_paths[1]));
            os << "command: transition\nring: " << ring_name(ring) << "\n";
            std::optional<TransitionCertificate> cert = detect_transition(K, V1, V2, ring);
            if (!cert) {
                os << "transition: none\n";
                code = 1;
            } else {
                os << "transition: "
                   << (cert->kind == TransitionKind::birth ? "birth" : "death") << "\n";
                os << "dimension: " << cert->dimension << "\n";
                os << "sigma: " << K.simplex(cert->sigma).label << "\n";
                os << "alpha: " << K.simplex(cert->alpha).label << "\n";
                os << "k: " << cert->k << "\n";
                os << "cusp: " << yn(cert->cusp) << "\n";
                os << "relaxed: " << yn(cert->checks.relaxed) << "\n";
                os << "candidates:";
                for (auto [s, a] : cert->checks.candidates) os << ' ' << pair_label(K, s, a);
                os << "\n";
                ConnHom h = build_conn_hom(K, V1, V2, ring);
                ConnHom g = build_conn_hom(K, V2, V1, ring);
                MorseComplexData d1 = build_morse_complex(K, V1, ring);
                MorseComplexData d2 = build_morse_complex(K, V2, ring);
                bool cm = verify_transition_chain_maps(*cert, h, g, d1, d2);
                CompositionReport comp = verify_composition(h, g, *cert);
                os << "chain_maps: " << yn(cm) << "\n";
                os << "composition: " << yn(comp.ok) << "\n";
                code = (cm && comp.ok) ? 0 : 1;
            }

        } else if (app.got_subcommand(c_cancel)) {
            SimplicialComplex K = load_complex(complex_path);
            need_fields(1);
            GradientField V = resolve_field(K, load_field_file(field_paths[0]));
            SimplexId sigma = K.id_of_label(pair_labels[0]);
            SimplexId alpha = K.id_of_label(pair_labels[1]);
            try {
                GradientField W = cancel_pair(K, V, sigma, alpha);
                std::string text = serialize_field(K, W);
                if (!out_path.empty()) {
                    write_file(out_path, text);
                    out_done = true;
                    os << "command: cancel\ncancel: ok\npairs: " << W.pairs().size() << "\n";
                    os << "written: " << out_path << "\n";
                } else {
                    os << text;
                }
            } catch (const BuildError& e) {
                os << "command: cancel\ncancel: failed\nreason: " << e.what() << "\n";
                code = 1;
            }

        } else if (app.got_subcommand(c_sequence)) {
            SimplicialComplex K = load_complex(complex_path);
            if (field_paths.size() < 2) throw BuildError("expected at least two --field arguments");
            std::vector<GradientField> fields;
            for (const std::string& path : field_paths)
                fields.push_back(resolve_field(K, load_field_file(path)));
            SequenceResult res = verify_transition_sequence(K, fields, ring);
            os << "command: sequence\nring: " << ring_name(ring) << "\n";
            for (size_t i = 0; i < res.steps.size(); ++i) {
                os << "step " << i << ": ";
                const SequenceStep& st = res.steps[i];
                if (st.isomorphism)
                    os << "isomorphism";
                else if (st.cert)
                    os << (st.cert->kind == TransitionKind::birth ? "birth " : "death ")
                       << pair_label(K, st.cert->sigma, st.cert->alpha) << " k=" << st.cert->k;
                else
                    os << "invalid";
                os << "\n";
            }
            os << "sequence: "
               << (res.ok ? "ok" : "broken at step " + std::to_string(res.break_index)) << "\n";
            code = res.ok ? 0 : 1;

        } else if (app.got_subcommand(c_mfc)) {
            SimplicialComplex K = load_complex(complex_path);
            MorseFunctionComplex M = build_mfc(K, std::nullopt, size_guard);
            os << "command: mfc\n";
            os << "primitive_fields: " << M.vertices.size() << "\n";
            os << "vertices:";
            for (const PrimitiveField& p : M.vertices) os << ' ' << pair_label(K, p.face, p.coface);
            os << "\n";
            os << "f-vector:";
            for (int d = 0; d <= M.dim(); ++d) os << ' ' << M.count(d);
            os << "\n";
            os << "dimension: " << M.dim() << "\n";
            os << "simplices: " << M.total() << "\n";
            std::vector<int> comp = components(M);
            int n = 0;
            for (int c : comp) n = std::max(n, c + 1);
            os << "components: " << n << "\n";
            os << "connected: " << yn(n <= 1) << "\n";
            if (!dot_path.empty()) {
                write_file(dot_path, to_dot(K, M));
                os << "dot: " << dot_path << "\n";
            }
        }

        if (!out_path.empty() && !out_done)
            write_file(out_path, os.str());
        else
            std::cout << os.str();
    } catch (const BuildError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return code;
}
