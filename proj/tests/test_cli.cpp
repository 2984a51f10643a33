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

#include <gtest/gtest.h>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cyclorep/factorrep.hpp"
#include "cyclorep/poly.hpp"

namespace {

using cyclorep::cli::run;

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome call(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("cyclorep_cli_" + std::to_string(::getpid()) + "_" + name);
}

TEST(Cli, PhiPrintsPolynomial) {
    auto r = call({"phi", "15"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "x^8-x^7+x^5-x^4+x^3-x+1\n");
    EXPECT_EQ(call({"phi", "1"}).out, "x-1\n");
}

TEST(Cli, CWithStats) {
    auto r = call({"c", "105", "--stats"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("x^105-1"), std::string::npos);
    EXPECT_NE(r.out.find("degree: 105"), std::string::npos);
    EXPECT_NE(r.out.find("height: 1"), std::string::npos);
    EXPECT_NE(r.out.find("terms: 2"), std::string::npos);
}

TEST(Cli, FactorVocabularies) {
    EXPECT_EQ(call({"factor", "x^105-1", "--vocab", "c"}).out, "C_105\n");
    auto phi = call({"factor", "x^105-1"});
    EXPECT_EQ(phi.code, 0);
    EXPECT_EQ(phi.out.rfind("Phi_1 * Phi_3", 0), 0u) << phi.out;
    EXPECT_EQ(call({"factor", "x^8+x^3+x^5+1"}).out, "Phi_2^2 * Phi_6 * Phi_10\n");
}

TEST(Cli, FactorOutputReparsesToInput) {
    for (std::string in : {"x^105-1", "x^8+x^5+x^3+1", "2*x^5-2*x", "x^4+x+1", "x^12-x^6"}) {
        const auto f = cyclorep::parse_poly(in);
        for (std::string v : {"plain", "phi", "c"}) {
            for (bool sq : {false, true}) {
                std::vector<std::string> args{"factor", in, "--vocab", v};
                if (sq) args.push_back("--squarefree-only");
                auto r = call(args);
                ASSERT_EQ(r.code, 0) << in << " " << v << ": " << r.err;
                std::string text = r.out.substr(0, r.out.size() - 1);
                EXPECT_EQ(cyclorep::expand(cyclorep::parse_factorization(text)), f) << in << " " << v << " -> " << text;
            }
        }
    }
}

TEST(Cli, Detect) {
    auto yes = call({"detect", "x^6-1"});
    EXPECT_EQ(yes.code, 0);
    EXPECT_EQ(yes.out.rfind("cyclotomic:", 0), 0u) << yes.out;
    auto no = call({"detect", "x^2-x-1"});
    EXPECT_EQ(no.code, 0);
    EXPECT_EQ(no.out.rfind("not-cyclotomic", 0), 0u) << no.out;
}

TEST(Cli, SizeReportsMeasuredBits) {
    auto r = call({"-N", "8", "-K", "6", "size", "x^105-1", "--vocab", "sparse"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("measured_bits: 34"), std::string::npos) << r.out;
}

TEST(Cli, EncodeDecodeRoundTrip) {
    const auto path = temp_path("blob.bin");
    for (std::string v : {"dense", "sparse", "plain", "phi", "c"}) {
        auto e = call({"encode", "x^105-1", "-o", path.string(), "--vocab", v});
        ASSERT_EQ(e.code, 0) << v << ": " << e.err;
        auto d = call({"decode", path.string()});
        ASSERT_EQ(d.code, 0) << v << ": " << d.err;
        std::string text = d.out.substr(0, d.out.find('\n'));
        // Polynomial layouts decode to polynomial text, factorizations to factor text.
        cyclorep::SparsePoly back;
        try {
            back = cyclorep::parse_poly(text);
        } catch (const std::exception&) {
            back = cyclorep::expand(cyclorep::parse_factorization(text));
        }
        EXPECT_EQ(back, cyclorep::parse_poly("x^105-1")) << v << " -> " << text;
    }
    EXPECT_EQ(call({"encode", "C_105", "-o", path.string()}).code, 0);
    EXPECT_EQ(call({"decode", path.string()}).out.substr(0, 6), "C_105\n");
    std::filesystem::remove(path);
}

TEST(Cli, CorruptBlobIsDomainError) {
    const auto path = temp_path("bad.bin");
    {
        std::ofstream f(path, std::ios::binary);
        f << "CPxx";
    }
    EXPECT_EQ(call({"decode", path.string()}).code, 4);
    std::filesystem::remove(path);
}

TEST(Cli, AtFileInput) {
    const auto path = temp_path("in.txt");
    {
        std::ofstream f(path);
        f << "x^6-1\n";
    }
    auto r = call({"factor", "@" + path.string(), "--vocab", "c"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "C_6\n");
    std::filesystem::remove(path);
}

TEST(Cli, Tables) {
    auto t1 = call({"table", "1", "--max", "400"});
    EXPECT_EQ(t1.code, 0);
    EXPECT_NE(t1.out.find("105"), std::string::npos);
    EXPECT_NE(t1.out.find("385"), std::string::npos);
    auto rows = cyclorep::cli::table1(400);
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_EQ(call({"table", "2", "--n", "105", "--csv"}).code, 0);
    EXPECT_EQ(call({"table", "3", "--p", "5", "--q", "7"}).code, 0);
    EXPECT_EQ(call({"table", "3", "--p", "4", "--q", "7"}).code, 2);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(call({}).code, 2);
    EXPECT_EQ(call({"phi", "0"}).code, 2);
    EXPECT_EQ(call({"phi", "abc"}).code, 2);
    EXPECT_EQ(call({"bogus"}).code, 2);
    EXPECT_EQ(call({"factor", "x^+"}).code, 3);
    EXPECT_EQ(call({"factor", "0"}).code, 4);
    EXPECT_EQ(call({"decode", "/nonexistent/blob"}).code, 1);
    EXPECT_EQ(call({"-N", "2", "encode", "x^105-1", "-o", temp_path("cap.bin").string()}).code, 4);
    EXPECT_EQ(call({"--help"}).code, 0);
}

TEST(Cli, Deterministic) {
    for (int i = 0; i < 3; ++i) {
        EXPECT_EQ(call({"factor", "x^60-1", "--vocab", "phi"}).out, call({"factor", "x^60-1", "--vocab", "phi"}).out);
        EXPECT_EQ(call({"table", "2", "--n", "30"}).out, call({"table", "2", "--n", "30"}).out);
    }
}

}  // namespace
