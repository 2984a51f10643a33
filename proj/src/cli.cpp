/*
   Copyright 2026 The cyclorep Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "cyclorep/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <iterator>
#include <sstream>

#include "cyclorep/codec.hpp"
#include "cyclorep/cyclotomic.hpp"
#include "cyclorep/errors.hpp"
#include "cyclorep/factorrep.hpp"
#include "cyclorep/numtheory.hpp"

namespace cyclorep::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::int64_t positive_arg(const std::string& s, const char* what) {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || p != s.data() + s.size() || v <= 0) {
        throw UsageError(std::string(what) + " must be a positive integer, got '" + s + "'");
    }
    return v;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw IoError("cannot read '" + path + "'");
    return data;
}

// Inline literal, or @path for the file contents.
std::string input_text(const std::string& arg) { return arg.starts_with("@") ? read_file(arg.substr(1)) : arg; }

SparsePoly input_poly(const std::string& arg) {
    SparsePoly f = parse_poly(input_text(arg));
    if (f.is_zero()) throw DomainError("the zero polynomial has no factorization");
    return f;
}

// Full factorization with every Phi_k written out.
PlainFactorization plain_full(const SparsePoly& f) {
    const auto pf = factor_full(f);
    PlainFactorization out;
    for (const auto& p : pf.phi_factors) {
        out.factors.push_back({p.multiplicity, phi_poly(static_cast<std::int64_t>(p.k))});
    }
    out.factors.insert(out.factors.end(), pf.other_factors.begin(), pf.other_factors.end());
    if (pf.x_power > 0) out.factors.push_back({pf.x_power, SparsePoly::monomial(1, 1)});
    out.content = pf.content;
    return out;
}

Factorization factor_in(const SparsePoly& f, const std::string& vocab, bool squarefree_only) {
    if (vocab == "plain") return squarefree_only ? squarefree_decomposition(f) : plain_full(f);
    // Square-free blocks that are products of Phi_k are stored symbolically,
    // so for these vocabularies the square-free form is the factored one.
    const auto pf = factor_full(f);
    if (vocab == "phi") return pf;
    return to_c_aware(pf);
}

InnerPoly parse_inner(const std::string& s) { return s == "dense" ? InnerPoly::Dense : InnerPoly::Sparse; }

Representation representation_of(const SparsePoly& f, const std::string& vocab, bool squarefree_only) {
    if (vocab == "dense") return to_dense(f);
    if (vocab == "sparse") return f;
    return std::visit([](auto&& v) -> Representation { return v; }, factor_in(f, vocab, squarefree_only));
}

// Polynomial text first, factorization text as the fallback.
Representation encode_input(const std::string& arg, const std::string& vocab, bool squarefree_only) {
    const std::string text = input_text(arg);
    try {
        SparsePoly f = parse_poly(text);
        if (f.is_zero() && vocab != "dense" && vocab != "sparse") {
            throw DomainError("the zero polynomial has no factorization");
        }
        return representation_of(f, vocab, squarefree_only);
    } catch (const ParseError& poly_error) {
        try {
            return std::visit([](auto&& v) -> Representation { return v; }, parse_factorization(text));
        } catch (const ParseError&) {
            throw poly_error;
        }
    }
}

std::string render_value(const Representation& v) {
    struct Visitor {
        std::string operator()(const DensePoly& d) const { return format_poly(to_sparse(d)); }
        std::string operator()(const SparsePoly& f) const { return format_poly(f); }
        std::string operator()(const PlainFactorization& f) const { return to_string(f); }
        std::string operator()(const PhiAwareFactorization& f) const { return to_string(f); }
        std::string operator()(const CAwareFactorization& f) const { return to_string(f); }
    };
    return std::visit(Visitor{}, v);
}

void print_stats(std::ostream& out, const SparsePoly& f) {
    out << "degree: " << f.degree() << "\n";
    out << "height: " << height(f).get_str() << "\n";
    out << "terms: " << f.term_count() << "\n";
}

TableRow size_row(const std::string& vocab, TableForm form, const Representation& v, InnerPoly inner, unsigned N,
                  unsigned K, std::uint64_t paper_bits) {
    TableRow r;
    r.label = vocab;
    r.columns = {{"form", to_string(form)},
                 {"measured_bits", measured_bits(v, N, K, inner)},
                 {"paper_bits", paper_bits}};
    return r;
}

std::vector<TableRow> size_table(const SparsePoly& f, unsigned N, unsigned K,
                                 const std::function<std::uint64_t(TableVocab, TableForm)>& paper) {
    const auto pf = factor_full(f);
    const auto cf = to_c_aware(pf);
    const auto sq = squarefree_decomposition(f);
    const auto full = plain_full(f);
    PhiAwareFactorization phi_expanded;
    phi_expanded.other_factors = {{1, f}};
    CAwareFactorization c_expanded;
    c_expanded.other_factors = {{1, f}};

    std::vector<TableRow> rows;
    for (auto vocab : {TableVocab::Dense, TableVocab::Sparse, TableVocab::Phi, TableVocab::C}) {
        for (auto form : {TableForm::Expanded, TableForm::SquareFree, TableForm::Factored}) {
            Representation v;
            InnerPoly inner = vocab == TableVocab::Dense ? InnerPoly::Dense : InnerPoly::Sparse;
            switch (vocab) {
                case TableVocab::Dense:
                case TableVocab::Sparse:
                    if (form == TableForm::Expanded) {
                        v = vocab == TableVocab::Dense ? Representation(to_dense(f)) : Representation(f);
                    } else {
                        v = form == TableForm::SquareFree ? sq : full;
                    }
                    break;
                case TableVocab::Phi:
                    v = form == TableForm::Expanded ? phi_expanded : pf;
                    break;
                case TableVocab::C:
                    v = form == TableForm::Expanded ? Representation(c_expanded) : Representation(cf);
                    break;
            }
            rows.push_back(size_row(to_string(vocab), form, v, inner, N, K, paper(vocab, form)));
        }
    }
    return rows;
}

std::string cell(const std::variant<std::uint64_t, std::string>& v) {
    return std::holds_alternative<std::string>(v) ? std::get<std::string>(v)
                                                  : std::to_string(std::get<std::uint64_t>(v));
}

}  // namespace

std::vector<TableRow> table1(std::int64_t k_max) {
    std::vector<TableRow> rows;
    for (const auto& r : height_records(k_max)) {
        if (r.height < 2) continue;
        rows.push_back({"", {{"height", r.height.get_str()}, {"k", r.first_k}, {"phi_k", r.phi_of_k}}});
    }
    return rows;
}

std::vector<TableRow> table2(std::uint64_t n, unsigned N, unsigned K) {
    if (n < 3) throw DomainError("table 2 needs --n >= 3");
    return size_table(SparsePoly::binomial(n), N, K,
                      [n](TableVocab v, TableForm f) { return table2_formula_bits(v, f, n); });
}

std::vector<TableRow> table3(std::uint64_t p, std::uint64_t q, unsigned N, unsigned K) {
    if (p == q || !is_prime(p) || !is_prime(q)) throw DomainError("table 3 needs distinct primes --p and --q");
    return size_table(mul(SparsePoly::binomial(p), SparsePoly::binomial(q)), N, K,
                      [p, q](TableVocab v, TableForm f) { return table3_formula_bits(v, f, p, q); });
}

std::string render(const std::vector<TableRow>& rows, bool csv) {
    if (rows.empty()) return "";
    const bool labelled = std::any_of(rows.begin(), rows.end(), [](const TableRow& r) { return !r.label.empty(); });
    std::vector<std::vector<std::string>> grid;
    std::vector<std::string> head;
    if (labelled) head.push_back("representation");
    for (const auto& [name, value] : rows.front().columns) head.push_back(name);
    grid.push_back(head);
    for (const auto& r : rows) {
        std::vector<std::string> line;
        if (labelled) line.push_back(r.label);
        for (const auto& [name, value] : r.columns) line.push_back(cell(value));
        grid.push_back(line);
    }
    std::ostringstream out;
    if (csv) {
        for (const auto& line : grid) {
            for (std::size_t i = 0; i < line.size(); ++i) out << (i ? "," : "") << line[i];
            out << "\n";
        }
        return out.str();
    }
    std::vector<std::size_t> width(head.size(), 0);
    // Text columns flush left, numeric ones (header included) flush right.
    std::vector<bool> numeric(head.size(), true);
    for (std::size_t r = 0; r < grid.size(); ++r) {
        for (std::size_t i = 0; i < grid[r].size(); ++i) {
            const auto& v = grid[r][i];
            width[i] = std::max(width[i], v.size());
            if (r > 0 && (v.empty() || !std::all_of(v.begin(), v.end(), ::isdigit))) numeric[i] = false;
        }
    }
    for (const auto& line : grid) {
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (i) out << "  ";
            const std::string pad(width[i] - line[i].size(), ' ');
            out << (numeric[i] ? pad + line[i] : line[i] + (i + 1 < line.size() ? pad : ""));
        }
        out << "\n";
    }
    return out.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cyclotomic-aware polynomial representations", "cyclorep"};
    app.require_subcommand(1);
    unsigned N = 16, K = 16;
    bool csv = false, stats = false;
    app.add_option("-N", N, "Bit width of degrees, counts and multiplicities")->check(CLI::Range(1, 63));
    app.add_option("-K", K, "Bit width of the coefficient-size field")->check(CLI::Range(1, 63));
    app.add_flag("--csv", csv, "Comma-separated table output");
    app.add_flag("--stats", stats, "Append degree, height and term count");

    std::string index_arg, input, vocab = "phi", inner_name = "sparse", output_path;
    bool squarefree_only = false;

    auto* phi = app.add_subcommand("phi", "Print Phi_k");
    phi->add_option("k", index_arg)->required();
    auto* c = app.add_subcommand("c", "Print x^n-1");
    c->add_option("n", index_arg)->required();

    auto* factor = app.add_subcommand("factor", "Factor a polynomial in one vocabulary");
    factor->add_option("input", input, "Polynomial literal or @file")->required();
    factor->add_option("--vocab", vocab)->check(CLI::IsMember({"plain", "phi", "c"}));
    factor->add_flag("--squarefree-only", squarefree_only, "Plain vocabulary: stop at the square-free decomposition");

    auto* detect = app.add_subcommand("detect", "Decide whether every root is a root of unity");
    detect->add_option("input", input, "Polynomial literal or @file")->required();

    const std::vector<std::string> vocab_sized{"dense", "sparse", "plain", "phi", "c"};
    auto* size = app.add_subcommand("size", "Measured and closed-form sizes");
    size->add_option("input", input, "Polynomial literal or @file")->required();
    size->add_option("--vocab", vocab)->check(CLI::IsMember(vocab_sized));
    size->add_option("--inner", inner_name)->check(CLI::IsMember({"dense", "sparse"}));
    size->add_flag("--squarefree-only", squarefree_only);

    auto* encode_cmd = app.add_subcommand("encode", "Write a binary blob");
    encode_cmd->add_option("input", input, "Polynomial or factorization text, or @file")->required();
    encode_cmd->add_option("-o,--output", output_path, "Blob path")->required();
    encode_cmd->add_option("--vocab", vocab)->check(CLI::IsMember(vocab_sized));
    encode_cmd->add_option("--inner", inner_name)->check(CLI::IsMember({"dense", "sparse"}));
    encode_cmd->add_flag("--squarefree-only", squarefree_only);

    auto* decode_cmd = app.add_subcommand("decode", "Print the value stored in a blob");
    decode_cmd->add_option("path", input)->required();

    std::string which;
    std::int64_t max_k = 0;
    std::uint64_t n = 0, p = 0, q = 0;
    auto* table = app.add_subcommand("table", "Reproduce a results table");
    table->add_option("which", which)->required()->check(CLI::IsMember({"1", "2", "3"}));
    table->add_option("--max", max_k);
    table->add_option("--n", n);
    table->add_option("--p", p);
    table->add_option("--q", q);

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (phi->parsed() || c->parsed()) {
            const auto k = positive_arg(index_arg, phi->parsed() ? "k" : "n");
            const SparsePoly f = phi->parsed() ? phi_poly(k) : c_poly(k);
            out << format_poly(f) << "\n";
            if (stats) print_stats(out, f);
        } else if (factor->parsed()) {
            const SparsePoly f = input_poly(input);
            out << to_string(factor_in(f, vocab, squarefree_only)) << "\n";
        } else if (detect->parsed()) {
            const SparsePoly f = input_poly(input);
            const Verdict quick = is_cyclotomic_quick(f);
            const auto ext = extract_cyclotomic_factors(f);
            const bool pure = ext.cofactor.degree() == 0;
            if (quick == Verdict::Cyclotomic && !pure) throw InvariantViolation("quick test and division disagree");
            if (pure) {
                out << "cyclotomic: " << to_string(factor_full(f)) << "\n";
            } else {
                out << "not-cyclotomic (cofactor: " << format_poly(ext.cofactor) << ")\n";
            }
            if (stats) out << "quick-test: " << to_string(quick) << "\n";
        } else if (size->parsed()) {
            const SparsePoly f = input_poly(input);
            const auto v = representation_of(f, vocab, squarefree_only);
            const auto r = size_report(v, N, K, parse_inner(inner_name));
            out << "layout: " << to_string(r.layout) << "\n";
            out << "measured_bits: " << r.measured_bits << "\n";
            out << "paper_formula_bits: " << r.paper_formula_bits << "\n";
            out << "blob_bytes: " << kHeaderBytes + (r.measured_bits + 7) / 8 << "\n";
        } else if (encode_cmd->parsed()) {
            const auto v = encode_input(input, vocab, squarefree_only);
            const auto blob = encode(v, N, K, parse_inner(inner_name));
            std::ofstream file(output_path, std::ios::binary);
            if (!file) throw IoError("cannot open '" + output_path + "' for writing");
            file.write(reinterpret_cast<const char*>(blob.bytes.data()), static_cast<std::streamsize>(blob.bytes.size()));
            if (!file) throw IoError("cannot write '" + output_path + "'");
            out << output_path << ": " << blob.bytes.size() << " bytes, " << blob.body_bits << " body bits\n";
        } else if (decode_cmd->parsed()) {
            const std::string data = read_file(input);
            const std::vector<std::uint8_t> bytes(data.begin(), data.end());
            const auto d = decode(bytes);
            out << render_value(d.value) << "\n";
        } else if (table->parsed()) {
            std::vector<TableRow> rows;
            if (which == "1") {
                if (max_k <= 0) throw UsageError("table 1 needs --max >= 1");
                rows = table1(max_k);
            } else {
                try {
                    rows = which == "2" ? table2(n, N, K) : table3(p, q, N, K);
                } catch (const DomainError& e) {
                    throw UsageError(e.what());
                }
            }
            out << render(rows, csv);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return kIoError;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const InvariantViolation& e) {
        err << "internal error: " << e.what() << "\n";
        return kIoError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kDomain;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kIoError;
    }
    return kOk;
}

}  // namespace cyclorep::cli
