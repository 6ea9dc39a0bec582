/*
 * Copyright 2026 The ppsolve authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "pg/pgsolver_io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace pg {

namespace {

struct Cursor {
    std::string_view text;
    size_t pos = 0;
    int line = 1;

    void skip_ws()
    {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
            if (text[pos] == '\n') ++line;
            ++pos;
        }
    }

    bool eof()
    {
        skip_ws();
        return pos == text.size();
    }

    char peek()
    {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool accept(char c)
    {
        if (peek() != c) return false;
        ++pos;
        return true;
    }

    long long number()
    {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ParseError("expected a number", line);
        long long value = 0;
        for (size_t i = start; i < pos; ++i) {
            value = value * 10 + (text[i] - '0');
            if (value > (1ll << 60)) throw ParseError("number too large", line);
        }
        return value;
    }

    std::string quoted()
    {
        // opening quote already consumed
        std::string out;
        while (pos < text.size() && text[pos] != '"') {
            if (text[pos] == '\n') ++line;
            out.push_back(text[pos++]);
        }
        if (pos == text.size()) throw ParseError("unterminated name", line);
        ++pos;
        return out;
    }

    bool word(std::string_view w)
    {
        skip_ws();
        if (text.substr(pos, w.size()) != w) return false;
        size_t end = pos + w.size();
        if (end < text.size()
            && std::isalnum(static_cast<unsigned char>(text[end]))) return false;
        pos = end;
        return true;
    }
};

struct Record {
    long long id;
    int priority;
    Player owner;
    std::vector<long long> successors;
    std::string name;
    int line;
};

} // namespace

Game parse_pgsolver(std::string_view text)
{
    Cursor c{text};

    long long id_bound = -1;
    if (c.word("parity")) {
        id_bound = c.number();
        if (!c.accept(';')) throw ParseError("expected ';' after header", c.line);
    }

    std::vector<Record> records;
    while (!c.eof()) {
        Record rec;
        rec.line = c.line;
        rec.id = c.number();
        if (id_bound >= 0 && rec.id > id_bound)
            throw ParseError("id exceeds the header bound", rec.line);
        long long prio = c.number();
        rec.priority = int(prio);
        long long owner = c.number();
        if (owner != 0 && owner != 1) throw ParseError("owner must be 0 or 1", c.line);
        rec.owner = Player{int(owner)};

        if (c.peek() == ';' || c.peek() == '"' || c.eof())
            throw EmptySuccessorsError(rec.id);
        rec.successors.push_back(c.number());
        while (c.accept(','))
            rec.successors.push_back(c.number());

        if (c.accept('"')) rec.name = c.quoted();

        if (!c.accept(';') && !c.eof())
            throw ParseError("expected ';'", c.line);
        records.push_back(std::move(rec));
    }

    // Dense mapping in ascending id order.
    std::map<long long, int> index;
    for (const auto& rec : records) {
        auto [it, fresh] = index.emplace(rec.id, 0);
        if (!fresh) throw DuplicateIdError(rec.id);
    }
    int next = 0;
    for (auto& [id, idx] : index) idx = next++;

    std::vector<Game::PositionSpec> spec(records.size());
    for (const auto& rec : records) {
        auto& p = spec[size_t(index.at(rec.id))];
        p.priority = rec.priority;
        p.owner = rec.owner;
        p.name = rec.name;
        p.successors.reserve(rec.successors.size());
        for (long long s : rec.successors) {
            auto it = index.find(s);
            if (it == index.end()) throw DanglingSuccessorError(rec.id, s);
            p.successors.push_back(it->second);
        }
    }
    return Game::build(spec);
}

std::string write_pgsolver(const Game& g)
{
    if (g.size() == 0) return {};
    std::ostringstream out;
    out << "parity " << g.size() - 1 << ";\n";
    for (int v = 0; v < g.size(); ++v) {
        out << v << ' ' << g.priority(v) << ' ' << to_int(g.owner(v)) << ' ';
        bool sep = false;
        for (int u : g.successors(v)) {
            if (sep) out << ',';
            sep = true;
            out << u;
        }
        if (!g.name(v).empty()) out << " \"" << g.name(v) << '"';
        out << ";\n";
    }
    return out.str();
}

} // namespace pg
