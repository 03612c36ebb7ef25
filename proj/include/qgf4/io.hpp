// Copyright 2026 The qgf4 Authors
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

#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qgf4/code.hpp"

namespace qgf4 {

// Code file format:
//   # comment lines anywhere, blank lines ignored
//   n r
//   r rows of n symbols over {0,1,w,W}

struct CodeFile {
    AdditiveCode code;
    std::vector<std::string> comments;  // without the leading '#'
    size_t dropped_rows = 0;            // dependent rows removed while reading
};

inline CodeFile parse_code(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    size_t lineno = 0;
    bool have_header = false;
    size_t n = 0, r = 0;
    std::vector<SymplecticVector> rows;
    CodeFile out;
    while (std::getline(in, line)) {
        lineno++;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos) {
            continue;
        }
        if (line[first] == '#') {
            out.comments.push_back(line.substr(first + 1));
            continue;
        }
        if (!have_header) {
            std::istringstream hs(line);
            long ln = -1, lr = -1;
            std::string extra;
            if (!(hs >> ln >> lr) || (hs >> extra) || ln < 0 || lr < 0) {
                throw ParseError("expected header 'n r'", lineno, first + 1);
            }
            n = size_t(ln);
            r = size_t(lr);
            have_header = true;
            continue;
        }
        size_t last = line.find_last_not_of(" \t");
        std::string body = line.substr(first, last - first + 1);
        if (rows.size() >= r) {
            throw ParseError("more than r=" + std::to_string(r) + " rows", lineno, first + 1);
        }
        for (size_t i = 0; i < body.size(); i++) {
            if (!Gf4::is_symbol(body[i])) {
                throw ParseError(std::string("invalid symbol '") + body[i] + "'", lineno, first + i + 1);
            }
        }
        if (body.size() != n) {
            throw ParseError("row has " + std::to_string(body.size()) + " symbols, expected " + std::to_string(n),
                             lineno, first + 1);
        }
        rows.push_back(SymplecticVector::from_string(body));
    }
    if (!have_header) {
        throw ParseError("missing header 'n r'", lineno + 1, 1);
    }
    if (rows.size() != r) {
        throw ParseError("expected " + std::to_string(r) + " rows, found " + std::to_string(rows.size()), lineno + 1,
                         1);
    }
    out.code = AdditiveCode(n, rows);
    out.dropped_rows = out.code.dropped_rows();
    return out;
}

inline std::string format_code(const AdditiveCode &c, const std::vector<std::string> &comments = {}) {
    std::string s;
    for (const auto &cm : comments) {
        s += "#" + cm + "\n";
    }
    s += std::to_string(c.n()) + " " + std::to_string(c.rank()) + "\n";
    for (const auto &g : c.generators()) {
        s += g.str() + "\n";
    }
    return s;
}

inline CodeFile read_code(const std::string &path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot open " + path);
    }
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_code(ss.str());
}

inline void write_code(const AdditiveCode &c, const std::string &path, const std::vector<std::string> &comments = {}) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot write " + path);
    }
    f << format_code(c, comments);
}

}  // namespace qgf4
