#include "kglab/reports.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "kglab/energy.hpp"
#include "kglab/norms.hpp"

namespace kg {

NormReport compute_norm_report(const Field& u, const Field& udot, const Field& zfield,
                               const NonlinearityCoeffs& coeffs, double t,
                               const std::vector<int>& sobolev_orders,
                               const std::vector<int>& z_j_scales) {
    u.require_same_grid(udot, "norm report");
    u.require_same_grid(zfield, "norm report");
    NormReport row;
    row.t = t;
    for (int s : sobolev_orders)
        row.sobolev[s] = sobolev_norm(u, static_cast<double>(s));
    ZNormResult z = z_norm(zfield);
    row.z_value = z.value;
    row.z_arg_k = z.arg_k;
    row.z_arg_l = z.arg_l;
    for (int J : z_j_scales)
        row.z_j[J] = z_j_norm(zfield, J).value;
    row.energy = modified_energy(u, udot, coeffs, 2).total;
    row.dispersive = dispersive_sum(u, udot);
    row.theta = (1.0 + t) * row.dispersive;
    return row;
}

std::string fmt_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc())
        throw NumericalFailure("fmt_double: conversion failed");
    return std::string(buf, ptr);
}

namespace {

void require_same_layout(const NormReport& a, const NormReport& b) {
    if (a.sobolev.size() != b.sobolev.size() || a.z_j.size() != b.z_j.size())
        throw ContractViolation("norm csv: rows carry different column sets");
    auto ia = a.sobolev.begin();
    for (auto ib = b.sobolev.begin(); ib != b.sobolev.end(); ++ia, ++ib)
        if (ia->first != ib->first)
            throw ContractViolation("norm csv: rows carry different sobolev orders");
    auto ja = a.z_j.begin();
    for (auto jb = b.z_j.begin(); jb != b.z_j.end(); ++ja, ++jb)
        if (ja->first != jb->first)
            throw ContractViolation("norm csv: rows carry different z_j scales");
}

} // namespace

void write_norm_csv(std::ostream& out, const std::vector<NormReport>& rows) {
    out << "t,dispersive,theta,energy";
    if (!rows.empty()) {
        for (const auto& [s, v] : rows.front().sobolev) out << ",sobolev" << s;
        out << ",z,z_arg_k,z_arg_l";
        for (const auto& [J, v] : rows.front().z_j) out << ",z_j" << J;
    } else {
        out << ",z,z_arg_k,z_arg_l";
    }
    out << "\n";
    for (const auto& row : rows) {
        require_same_layout(rows.front(), row);
        out << fmt_double(row.t) << ',' << fmt_double(row.dispersive) << ','
            << fmt_double(row.theta) << ',' << fmt_double(row.energy);
        for (const auto& [s, v] : row.sobolev) out << ',' << fmt_double(v);
        out << ',' << fmt_double(row.z_value) << ',' << row.z_arg_k << ',' << row.z_arg_l;
        for (const auto& [J, v] : row.z_j) out << ',' << fmt_double(v);
        out << "\n";
    }
}

std::string norm_report_json(const NormReport& row) {
    std::ostringstream out;
    out << "{\n  \"t\": " << fmt_double(row.t) << ",\n  \"sobolev\": {";
    bool first = true;
    for (const auto& [s, v] : row.sobolev) {
        out << (first ? "" : ", ") << "\"" << s << "\": " << fmt_double(v);
        first = false;
    }
    out << "},\n  \"z_norm\": {\"value\": " << fmt_double(row.z_value)
        << ", \"arg_k\": " << row.z_arg_k << ", \"arg_l\": " << row.z_arg_l << "},\n"
        << "  \"z_j\": {";
    first = true;
    for (const auto& [J, v] : row.z_j) {
        out << (first ? "" : ", ") << "\"" << J << "\": " << fmt_double(v);
        first = false;
    }
    out << "},\n  \"energy\": " << fmt_double(row.energy)
        << ",\n  \"dispersive\": " << fmt_double(row.dispersive)
        << ",\n  \"theta\": " << fmt_double(row.theta) << "\n}\n";
    return out.str();
}

std::string decay_fit_json_fragment(const DecayFit& fit) {
    std::ostringstream out;
    out << "{\"window\": [" << fmt_double(fit.window_lo) << ", " << fmt_double(fit.window_hi)
        << "], \"exponent\": " << fmt_double(fit.exponent)
        << ", \"amplitude\": " << fmt_double(fit.amplitude)
        << ", \"residual\": " << fmt_double(fit.residual)
        << ", \"n_used\": " << fit.n_used << "}";
    return out.str();
}

void write_bound_csv(std::ostream& out, const std::vector<BoundRow>& rows) {
    out << "k,n,t,sup_abs,bound,ratio\n";
    for (const auto& r : rows)
        out << r.k << ',' << r.n << ',' << fmt_double(r.t) << ',' << fmt_double(r.sup_abs)
            << ',' << fmt_double(r.bound) << ',' << fmt_double(r.ratio) << "\n";
}

namespace {

struct TokenReader {
    std::string text;
    std::size_t pos = 0;

    // Skips whitespace and #-comments; returns false at end of input.
    bool next_token(std::size_t& tok_begin, std::string& tok) {
        while (pos < text.size()) {
            char c = text[pos];
            if (c == '#') {
                while (pos < text.size() && text[pos] != '\n') ++pos;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos;
            } else {
                break;
            }
        }
        if (pos >= text.size()) return false;
        tok_begin = pos;
        while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
               text[pos] != '#')
            ++pos;
        tok = text.substr(tok_begin, pos - tok_begin);
        return true;
    }
};

[[noreturn]] void parse_fail(const std::string& path, std::size_t offset, const std::string& what) {
    throw ContractViolation("field file " + path + ": " + what + " at byte offset " +
                            std::to_string(offset));
}

double want_double(TokenReader& r, const std::string& path, const char* what) {
    std::size_t off = r.pos;
    std::string tok;
    if (!r.next_token(off, tok))
        parse_fail(path, r.text.size(), std::string("unexpected end of file, wanted ") + what);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        parse_fail(path, off, std::string("expected ") + what + ", got '" + tok + "'");
    return v;
}

long long want_int(TokenReader& r, const std::string& path, const char* what) {
    std::size_t off = r.pos;
    std::string tok;
    if (!r.next_token(off, tok))
        parse_fail(path, r.text.size(), std::string("unexpected end of file, wanted ") + what);
    long long v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        parse_fail(path, off, std::string("expected ") + what + ", got '" + tok + "'");
    return v;
}

} // namespace

Field read_field_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ContractViolation("field file " + path + ": cannot open");
    TokenReader r;
    {
        std::ostringstream buf;
        buf << in.rdbuf();
        r.text = buf.str();
    }
    GridSpec grid;
    grid.box_period = want_double(r, path, "box_period");
    grid.plane_points = static_cast<int>(want_int(r, path, "plane_points"));
    grid.mode_cutoff = static_cast<int>(want_int(r, path, "mode_cutoff"));
    grid.validate();
    Field f(grid);
    for (;;) {
        std::size_t off = r.pos;
        std::string tok;
        if (!r.next_token(off, tok)) break;
        long long i = 0;
        {
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), i);
            if (ec != std::errc() || ptr != tok.data() + tok.size())
                parse_fail(path, off, "expected index i, got '" + tok + "'");
        }
        long long j = want_int(r, path, "index j");
        long long q = want_int(r, path, "index q");
        if (i < 0 || i >= grid.nx() || j < 0 || j >= grid.nx() || q < 0 || q >= grid.ny())
            parse_fail(path, off, "coefficient index out of range for this grid");
        double re = want_double(r, path, "re");
        double im = want_double(r, path, "im");
        f.coeffs[grid.at(static_cast<int>(i), static_cast<int>(j), static_cast<int>(q))] =
            cplx(re, im);
    }
    return f;
}

void write_field_file(const std::string& path, const Field& f) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ContractViolation("field file " + path + ": cannot open for writing");
    out << "# spectral field snapshot: header then `i j q re im` per nonzero coefficient\n";
    out << fmt_double(f.grid.box_period) << ' ' << f.grid.plane_points << ' '
        << f.grid.mode_cutoff << "\n";
    for (int i = 0; i < f.grid.nx(); ++i)
        for (int j = 0; j < f.grid.nx(); ++j)
            for (int q = 0; q < f.grid.ny(); ++q) {
                cplx c = f.coeffs[f.grid.at(i, j, q)];
                if (c == cplx(0.0, 0.0)) continue;
                out << i << ' ' << j << ' ' << q << ' ' << fmt_double(c.real()) << ' '
                    << fmt_double(c.imag()) << "\n";
            }
    if (!out)
        throw NumericalFailure("field file " + path + ": write failed");
}

} // namespace kg
