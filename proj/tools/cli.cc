// Copyright 2026 The qec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "qec/classifier.h"
#include "qec/format.h"
#include "qec/pauli.h"
#include "qec/report.h"
#include "qec/subset.h"

namespace qec::cli {

namespace {

constexpr int kDenseDumpQubits = 3;

std::string complex_str(Complex c) {
    if (c.imag() == 0) {
        return format_double(c.real());
    }
    if (c.real() == 0) {
        return format_double(c.imag()) + "i";
    }
    return format_double(c.real()) + (c.imag() < 0 ? "" : "+") + format_double(c.imag()) + "i";
}

std::string one_line(std::string s) {
    std::replace(s.begin(), s.end(), '\n', ' ');
    while (!s.empty() && s.back() == ' ') {
        s.pop_back();
    }
    return s;
}

std::string active_str(const std::array<bool, 3> &active) {
    const std::string s = channel_list(active);
    return s.empty() ? "none" : s;
}

}  // namespace

BlochVector parse_input(const std::string &text) {
    static const std::map<std::string, BlochVector> named{
        {"0", {0, 0, 1}}, {"1", {0, 0, -1}}, {"plus", {1, 0, 0}}, {"plus-i", {0, 1, 0}}};
    if (auto it = named.find(text); it != named.end()) {
        return it->second;
    }
    std::vector<double> v;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        size_t used = 0;
        double d = 0;
        try {
            d = std::stod(token, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used == 0 || used != token.size() || !std::isfinite(d)) {
            throw UsageError("--input: bad component '" + token + "'");
        }
        v.push_back(d);
    }
    if (v.size() != 3 || text.back() == ',') {
        throw UsageError("--input: expected x,y,z or one of 0, 1, plus, plus-i; got '" + text + "'");
    }
    const double norm = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    if (std::abs(norm - 1) > 1e-6) {
        throw UsageError("--input: Bloch vector '" + text + "' has norm " + format_double(norm) + ", expected 1");
    }
    return {v[0] / norm, v[1] / norm, v[2] / norm};
}

int run_classify(int n, bool include_a, Format format, std::ostream &out) {
    const auto records = classify_family(n, include_a);
    switch (format) {
        case Format::Json:
            out << to_json(records, n, include_a).dump(2) << '\n';
            break;
        case Format::Csv:
            out << to_csv(records);
            break;
        case Format::Text:
            out << to_text(records, n, include_a);
            break;
    }
    return kOk;
}

int run_reduce(int n, const std::string &keep_text, const std::string &input, Format format, std::ostream &out) {
    SubsetSpec keep;
    try {
        keep = SubsetSpec::parse(n, keep_text);
    } catch (const std::invalid_argument &e) {
        throw UsageError(std::string("--keep: ") + e.what());
    }
    if (keep.empty()) {
        throw UsageError("--keep: subset must not be empty");
    }
    const BlochVector b = parse_input(input);
    // The branch sum carries exact dyadic coefficients, so printed terms are
    // free of rounding noise.
    const PauliSum rho = reduce_encoded_pauli(n, b, keep);
    const std::array<double, 3> norms = channel_decompose_pauli(n, keep).bloch_norms();
    const VerifyOptions defaults;
    const auto active = active_channels(norms, defaults.tol);
    const Classification predicted = explain(keep);
    const bool dump_dense = keep.size() <= kDenseDumpQubits;

    switch (format) {
        case Format::Json: {
            nlohmann::json j;
            j["n"] = n;
            j["keep"] = keep.str();
            j["labels"] = nlohmann::json::array();
            for (const Qubit &q : keep.labels()) {
                j["labels"].push_back(q.str());
            }
            j["input"] = {{"x", b.x}, {"y", b.y}, {"z", b.z}};
            j["terms"] = to_json(rho);
            if (dump_dense) {
                j["dense"] = to_json(sum_to_dense(rho));
            }
            j["predicted"] = std::string(to_string(predicted.cls));
            j["observed"] = std::string(to_string(observed_class(norms, defaults.tol)));
            j["channels"] = nlohmann::json::array();
            for (int r = 0; r < 3; ++r) {
                if (active[r]) {
                    j["channels"].push_back(std::string(1, "xyz"[r]));
                }
            }
            j["norms"] = {{"x", norms[0]}, {"y", norms[1]}, {"z", norms[2]}};
            out << j.dump(2) << '\n';
            break;
        }
        case Format::Csv:
            out << "string,re,im\n";
            for (const auto &[letters, c] : rho.sorted_terms()) {
                out << letters << ',' << format_double(c.real()) << ',' << format_double(c.imag()) << '\n';
            }
            break;
        case Format::Text: {
            out << "keep " << join_labels(keep.labels()) << "  input (" << format_double(b.x) << ", "
                << format_double(b.y) << ", " << format_double(b.z) << ")\n";
            for (const auto &[letters, c] : rho.sorted_terms()) {
                out << "  " << letters << "  " << complex_str(c) << '\n';
            }
            if (dump_dense) {
                const DenseOperator d = sum_to_dense(rho);
                out << "dense:\n";
                for (Eigen::Index r = 0; r < d.dim(); ++r) {
                    out << ' ';
                    for (Eigen::Index c = 0; c < d.dim(); ++c) {
                        out << ' ' << complex_str(d.entries()(r, c));
                    }
                    out << '\n';
                }
            }
            out << "class " << to_string(predicted.cls) << "  channels " << active_str(active) << '\n';
            break;
        }
    }
    return kOk;
}

int run_gamma(int n, int q, Format format, std::ostream &out) {
    if (q > n) {
        throw UsageError("--q: must be <= n (" + std::to_string(n) + "), got " + std::to_string(q));
    }
    if (format == Format::Csv) {
        throw UsageError("--format: gamma supports text and json");
    }
    if (format == Format::Json) {
        out << gamma_json(n, q).dump(2) << '\n';
    } else {
        out << gamma_text(n, q);
    }
    return kOk;
}

int run_verify(const VerifyOptions &options, Format format, const std::optional<std::string> &out_path,
               std::ostream &out, std::ostream &err) {
    const VerificationReport report = verify_all(options);
    std::string body;
    switch (format) {
        case Format::Json:
            body = to_json(report).dump(2) + "\n";
            break;
        case Format::Csv:
            body = to_csv(report);
            break;
        case Format::Text:
            body = to_text(report);
            break;
    }
    if (out_path) {
        std::ofstream f(*out_path, std::ios::binary);
        if (!f) {
            throw UsageError("--out: cannot open '" + *out_path + "'");
        }
        f << body;
    } else {
        out << body;
    }
    if (!report.passed()) {
        err << "verify: " << report.mismatch_count() << " mismatches out of " << report.results.size()
            << " subsets\n";
        return kMismatch;
    }
    return kOk;
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Encrypted-cloning simulator and verifier", "qec"};
    app.require_subcommand(1);
    const std::map<std::string, Format> formats{{"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};

    int n = 1;
    bool include_a = false;
    Format format = Format::Text;
    auto *classify = app.add_subcommand("classify", "Classify every subset of one family");
    classify->add_option("--n", n, "Number of signal-noise pairs")->required()->check(CLI::Range(1, 12));
    classify->add_flag("--include-a", include_a, "Enumerate H = {A} + C instead of storage subsets");
    classify->add_option("--format", format)->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

    std::string keep;
    std::string input;
    auto *reduce = app.add_subcommand("reduce", "Reduced state of one subset");
    reduce->add_option("--n", n)->required()->check(CLI::Range(1, 8));
    reduce->add_option("--keep", keep, "Comma-separated labels, e.g. A,S1,N2")->required();
    reduce->add_option("--input", input, "x,y,z or 0, 1, plus, plus-i")->required();
    reduce->add_option("--format", format)->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

    int q = 0;
    auto *gamma_cmd = app.add_subcommand("gamma", "L-matrices and the Gamma table");
    gamma_cmd->add_option("--n", n)->required()->check(CLI::Range(1, 64));
    gamma_cmd->add_option("--q", q)->required()->check(CLI::NonNegativeNumber);
    gamma_cmd->add_option("--format", format)->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

    VerifyOptions opt;
    std::optional<std::string> out_path;
    const std::map<std::string, PathChoice> paths{
        {"auto", PathChoice::Auto}, {"dense", PathChoice::Dense}, {"pauli", PathChoice::Pauli}};
    auto *verify = app.add_subcommand("verify", "Exhaustive classifier and closed-form sweep");
    verify->add_option("--max-n", opt.n_max)->check(CLI::Range(1, 8));
    verify->add_option("--tol", opt.tol)->check(CLI::PositiveNumber);
    verify->add_option("--seed", opt.seed);
    verify->add_option("--samples", opt.samples)->check(CLI::NonNegativeNumber);
    verify->add_option("--format", format)->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    verify->add_option("--out", out_path);
    verify->add_option("--path", opt.path)->transform(CLI::CheckedTransformer(paths, CLI::ignore_case));
    verify->add_flag("--timing", opt.timing, "Record wall time in the report");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "qec: " << one_line(e.what()) << '\n';
        return kUsage;
    }

    try {
        if (*classify) {
            return run_classify(n, include_a, format, out);
        }
        if (*reduce) {
            std::ostringstream buf;
            const int code = run_reduce(n, keep, input, format, buf);
            out << buf.str();
            return code;
        }
        if (*gamma_cmd) {
            std::ostringstream buf;
            const int code = run_gamma(n, q, format, buf);
            out << buf.str();
            return code;
        }
        return run_verify(opt, format, out_path, out, err);
    } catch (const UsageError &e) {
        err << "qec: " << one_line(e.what()) << '\n';
        return kUsage;
    } catch (const DenseLimitExceeded &e) {
        err << "qec: " << one_line(e.what()) << '\n';
        return kUsage;
    } catch (const std::invalid_argument &e) {
        err << "qec: " << one_line(e.what()) << '\n';
        return kUsage;
    }
}

}  // namespace qec::cli
