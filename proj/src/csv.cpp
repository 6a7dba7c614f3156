#include "ssrt/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace ssrt {

std::string format_ms(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", value);
    std::string s(buf);
    if (s.find('.') != std::string::npos) {
        while (s.back() == '0') s.pop_back();
        if (s.back() == '.') s.pop_back();
    }
    if (s == "-0") s = "0";
    return s;
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

double parse_double(const std::string& s, int line) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw CsvError("malformed numeric field '" + s + "'", line);
    }
}

} // namespace

std::string trials_to_csv(const SstDataset& d) {
    std::ostringstream out;
    out << "index,kind,ssd_ms,rt_ms,inhibited\n";
    for (const Trial& t : d.trials) {
        out << t.index << ',' << (t.kind == TrialKind::go ? "go" : "stop") << ',';
        if (t.ssd_ms) out << format_ms(*t.ssd_ms);
        out << ',';
        if (t.rt_ms) out << format_ms(*t.rt_ms);
        out << ',';
        if (t.inhibited) out << (*t.inhibited ? "true" : "false");
        out << '\n';
    }
    return out.str();
}

void write_trials_csv(const std::string& path, const SstDataset& d) {
    write_text_file(path, trials_to_csv(d));
}

SstDataset parse_trials_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    if (!std::getline(in, line)) throw CsvError("empty trial file", 1);
    ++line_no;
    if (split_fields(line) != std::vector<std::string>{"index", "kind", "ssd_ms", "rt_ms", "inhibited"})
        throw CsvError("expected header index,kind,ssd_ms,rt_ms,inhibited", line_no);

    SstDataset d;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto f = split_fields(line);
        if (f.size() != 5) throw CsvError("expected 5 fields", line_no);
        Trial t;
        t.index = static_cast<int>(parse_double(f[0], line_no));
        if (f[1] == "go") t.kind = TrialKind::go;
        else if (f[1] == "stop") t.kind = TrialKind::stop;
        else throw CsvError("kind must be 'go' or 'stop'", line_no);
        if (!f[2].empty()) t.ssd_ms = parse_double(f[2], line_no);
        if (!f[3].empty()) t.rt_ms = parse_double(f[3], line_no);
        if (!f[4].empty()) {
            if (f[4] == "true") t.inhibited = true;
            else if (f[4] == "false") t.inhibited = false;
            else throw CsvError("inhibited must be 'true' or 'false'", line_no);
        }
        if (!t.consistent())
            throw CsvError("inconsistent trial record (kind vs. ssd/rt/inhibited)", line_no);
        d.trials.push_back(t);
    }
    d.meta.n_trials = static_cast<int>(d.trials.size());
    return d;
}

SstDataset read_trials_csv(const std::string& path) {
    return parse_trials_csv(read_text_file(path));
}

void write_sample_csv(const std::string& path, const std::vector<double>& values) {
    std::ostringstream out;
    out << "value\n";
    for (double v : values) out << format_ms(v) << '\n';
    write_text_file(path, out.str());
}

std::vector<double> read_sample_csv(const std::string& path) {
    std::istringstream in(read_text_file(path));
    std::string line;
    std::vector<double> out;
    int line_no = 0;
    bool first = true;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (first) {
            first = false;
            if (line == "value") continue; // optional header
        }
        out.push_back(parse_double(line, line_no));
    }
    if (out.empty()) throw CsvError("sample file holds no values", line_no);
    return out;
}

SubjectTriples read_triples_csv(const std::string& path, ClusterType cluster) {
    std::istringstream in(read_text_file(path));
    std::string line;
    int line_no = 0;
    if (!std::getline(in, line)) throw CsvError("empty triples file", 1);
    ++line_no;
    if (split_fields(line) != std::vector<std::string>{"subject", "mu", "sigma", "tau"})
        throw CsvError("expected header subject,mu,sigma,tau", line_no);
    SubjectTriples t;
    t.cluster = cluster;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto f = split_fields(line);
        if (f.size() != 4) throw CsvError("expected 4 fields", line_no);
        t.rows.push_back({parse_double(f[1], line_no), parse_double(f[2], line_no),
                          parse_double(f[3], line_no)});
    }
    return t;
}

void write_triples_csv(const std::string& path, const SubjectTriples& triples) {
    std::ostringstream out;
    out << "subject,mu,sigma,tau\n";
    for (std::size_t i = 0; i < triples.rows.size(); ++i)
        out << (i + 1) << ',' << format_ms(triples.rows[i][0]) << ','
            << format_ms(triples.rows[i][1]) << ',' << format_ms(triples.rows[i][2]) << '\n';
    write_text_file(path, out.str());
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path + " for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
    if (!out) throw std::runtime_error("failed writing " + path);
}

} // namespace ssrt
