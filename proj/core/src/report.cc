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

#include "qec/report.h"

#include <sstream>

#include "qec/format.h"

namespace qec {

namespace {

using nlohmann::json;

std::string rule_path_str(const Classification &c) {
    std::string out;
    for (Condition cond : c.rule_path) {
        if (!out.empty()) {
            out += " > ";
        }
        out += condition_name(cond);
    }
    return out;
}

json rule_path_json(const Classification &c) {
    json out = json::array();
    for (Condition cond : c.rule_path) {
        out.push_back(std::string(condition_name(cond)));
    }
    return out;
}

json channels_json(const std::array<bool, 3> &active) {
    json out = json::array();
    for (int r = 0; r < 3; ++r) {
        if (active[r]) {
            out.push_back(std::string(1, "xyz"[r]));
        }
    }
    return out;
}

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

std::string text_subset(const SubsetSpec &s) { return s.empty() ? "{}" : "{" + s.str() + "}"; }

std::string phase_cell(const std::optional<Phase4> &p) {
    if (!p) {
        return ".";
    }
    switch (p->exponent()) {
        case 0:
            return "1";
        case 1:
            return "i";
        case 2:
            return "-1";
        default:
            return "-i";
    }
}

void check_gamma_args(int n, int q) {
    if (n < 1 || q < 0 || q > n) {
        throw std::invalid_argument("gamma: need n >= 1 and 0 <= q <= n");
    }
}

}  // namespace

std::string channel_list(const std::array<bool, 3> &active) {
    std::string out;
    for (int r = 0; r < 3; ++r) {
        if (active[r]) {
            if (!out.empty()) {
                out += ',';
            }
            out += "xyz"[r];
        }
    }
    return out;
}

json to_json(const VerificationReport &report) {
    const VerifyOptions &o = report.options;
    json meta;
    meta["n_min"] = o.n_min;
    meta["n_max"] = o.n_max;
    meta["tol"] = o.tol;
    meta["seed"] = o.seed;
    meta["samples"] = o.samples;
    meta["duration_ms"] = report.duration_ms ? json(*report.duration_ms) : json(nullptr);
    meta["path"] = o.path == PathChoice::Auto ? "auto" : o.path == PathChoice::Dense ? "dense" : "pauli";
    meta["subset_count"] = report.results.size();
    meta["mismatch_count"] = report.mismatch_count();
    meta["max_error"] = report.max_error();
    meta["assumption"] = kFullInformativenessAssumption;
    json results = json::array();
    for (const SubsetResult &r : report.results) {
        json row;
        row["n"] = r.n;
        row["subset"] = r.subset.str();
        row["family"] = r.family();
        row["predicted"] = std::string(to_string(r.predicted.cls));
        row["observed"] = std::string(to_string(r.observed));
        row["rule_path"] = rule_path_json(r.predicted);
        row["channels"] = channels_json(r.active);
        row["norms"] = {{"x", r.norms[0]}, {"y", r.norms[1]}, {"z", r.norms[2]}};
        row["max_err"] = r.max_error();
        row["mismatch"] = r.mismatch;
        row["path"] = std::string(to_string(r.path));
        results.push_back(std::move(row));
    }
    return {{"meta", std::move(meta)}, {"results", std::move(results)}};
}

std::string to_csv(const VerificationReport &report) {
    std::ostringstream out;
    out << "n,subset,family,predicted,observed,channels,norm_x,norm_y,norm_z,max_err,mismatch,path\n";
    for (const SubsetResult &r : report.results) {
        out << r.n << ',' << csv_field(r.subset.str()) << ',' << r.family() << ',' << to_string(r.predicted.cls)
            << ',' << to_string(r.observed) << ',' << csv_field(channel_list(r.active)) << ','
            << format_double(r.norms[0]) << ',' << format_double(r.norms[1]) << ',' << format_double(r.norms[2])
            << ',' << format_double(r.max_error()) << ',' << (r.mismatch ? "true" : "false") << ','
            << to_string(r.path) << '\n';
    }
    return out.str();
}

std::string to_text(const VerificationReport &report) {
    std::ostringstream out;
    for (const SubsetResult &r : report.results) {
        if (!r.mismatch) {
            continue;
        }
        out << "MISMATCH n=" << r.n << ' ' << r.family() << ' ' << text_subset(r.subset)
            << " predicted=" << short_name(r.predicted.cls) << " observed=" << short_name(r.observed)
            << " channels=" << (r.active == std::array<bool, 3>{} ? "-" : channel_list(r.active))
            << " max_err=" << format_double(r.max_error()) << '\n';
    }
    const VerifyOptions &o = report.options;
    out << "n=" << o.n_min << ".." << o.n_max << " seed=" << o.seed << " samples=" << o.samples
        << " tol=" << format_double(o.tol) << '\n';
    out << "subsets=" << report.results.size() << " mismatches=" << report.mismatch_count()
        << " max_err=" << format_double(report.max_error()) << '\n';
    if (report.duration_ms) {
        out << "duration_ms=" << format_double(*report.duration_ms) << '\n';
    }
    out << (report.passed() ? "PASS" : "FAIL") << '\n';
    return out.str();
}

json to_json(const std::vector<ClassificationRecord> &records, int n, bool include_a) {
    json rows = json::array();
    for (const ClassificationRecord &r : records) {
        rows.push_back({{"subset", r.subset.str()},
                        {"class", std::string(to_string(r.predicted.cls))},
                        {"rule_path", rule_path_json(r.predicted)}});
    }
    return {{"n", n}, {"family", include_a ? "with_a" : "storage"}, {"results", std::move(rows)}};
}

std::string to_csv(const std::vector<ClassificationRecord> &records) {
    std::ostringstream out;
    out << "subset,family,class,rule_path\n";
    for (const ClassificationRecord &r : records) {
        out << csv_field(r.subset.str()) << ',' << (r.subset.includes_a() ? "with_a" : "storage") << ','
            << to_string(r.predicted.cls) << ',' << csv_field(rule_path_str(r.predicted)) << '\n';
    }
    return out.str();
}

std::string to_text(const std::vector<ClassificationRecord> &records, int n, bool include_a) {
    std::vector<std::string> names;
    size_t width = 0;
    for (const ClassificationRecord &r : records) {
        names.push_back(text_subset(r.subset));
        width = std::max(width, names.back().size());
    }
    std::ostringstream out;
    out << "n=" << n << ' ' << (include_a ? "with_a" : "storage") << ' ' << records.size() << " subsets\n";
    for (size_t k = 0; k < records.size(); ++k) {
        const Classification &c = records[k].predicted;
        out << names[k] << std::string(width - names[k].size() + 2, ' ') << to_string(c.cls);
        out << std::string(25 - to_string(c.cls).size(), ' ') << rule_path_str(c) << '\n';
    }
    return out.str();
}

json gamma_json(int n, int q) {
    check_gamma_args(n, q);
    const GammaTable table = gamma_table(n, q);
    json sectors = json::array();
    for (int j = 1; j <= 3; ++j) {
        const CoeffMatrix4 l = l_matrix(n, q, j);
        json rows = json::array();
        for (int mu = 0; mu < 4; ++mu) {
            json row = json::array();
            for (int nu = 0; nu < 4; ++nu) {
                const auto &e = l.at(mu, nu);
                row.push_back(e ? json(phase_cell(e)) : json(nullptr));
            }
            rows.push_back(std::move(row));
        }
        json gammas = json::array();
        for (int r = 0; r < 4; ++r) {
            gammas.push_back(gamma(n, q, j, r).str());
        }
        const GammaEntry &sel = table.sector[j - 1];
        sectors.push_back({{"j", j},
                           {"l_matrix", std::move(rows)},
                           {"gamma", std::move(gammas)},
                           {"selected", {{"r", sel.r},
                                         {"coefficient", sel.coefficient},
                                         {"letter", std::string(1, letter_char(sel.letter))}}}});
    }
    return {{"n", n}, {"q", q}, {"sectors", std::move(sectors)}};
}

std::string gamma_text(int n, int q) {
    check_gamma_args(n, q);
    const GammaTable table = gamma_table(n, q);
    std::ostringstream out;
    out << "n=" << n << " q=" << q << '\n';
    for (int j = 1; j <= 3; ++j) {
        const CoeffMatrix4 l = l_matrix(n, q, j);
        out << "\nL_" << j << ":\n";
        for (int mu = 0; mu < 4; ++mu) {
            out << "  ";
            for (int nu = 0; nu < 4; ++nu) {
                const std::string cell = phase_cell(l.at(mu, nu));
                out << std::string(4 - cell.size(), ' ') << cell;
            }
            out << '\n';
        }
        for (int r = 0; r < 4; ++r) {
            out << "  Gamma_" << j << ',' << r << " = " << gamma(n, q, j, r).str() << '\n';
        }
        const GammaEntry &sel = table.sector[j - 1];
        out << "  selected r=" << sel.r << ": " << sel.coefficient << letter_char(sel.letter) << '\n';
    }
    return out.str();
}

}  // namespace qec
