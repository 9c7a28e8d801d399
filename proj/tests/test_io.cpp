#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "radiogrid/constructions.hpp"
#include "radiogrid/io.hpp"

using namespace radiogrid;

namespace {

int run(std::initializer_list<const char*> args, std::string* out_text = nullptr,
        std::string* err_text = nullptr) {
    std::vector<const char*> argv{"radiogrid"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    if (out_text) *out_text = out.str();
    if (err_text) *err_text = err.str();
    return code;
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("/tmp/radiogrid_test_" + name) {}
    ~TempFile() { std::remove(path.c_str()); }
    void write(const std::string& text) {
        std::ofstream f(path, std::ios::binary);
        f << text;
    }
    std::string read() const {
        std::ifstream f(path, std::ios::binary);
        std::stringstream ss;
        ss << f.rdbuf();
        return ss.str();
    }
};

}  // namespace

TEST_CASE("document round-trips through JSON") {
    GridGraph g(5, 4);
    const LabelingDocument doc = LabelingDocument::from_labeling(g, optimal_labeling(g));
    const std::string text = to_json(doc);
    const LabelingDocument back = document_from_json(text);
    CHECK(back.a == doc.a);
    CHECK(back.b == doc.b);
    CHECK(back.labels_by_index == doc.labels_by_index);
    CHECK(back.span == doc.span);
    CHECK(back.parity_case == doc.parity_case);
    CHECK(back.formula_rn == doc.formula_rn);
    CHECK(back.formula_t_plus == doc.formula_t_plus);
    CHECK(to_json(back) == text);
}

TEST_CASE("ascii layout puts (1,1) bottom-left") {
    GridGraph g(3, 3);
    Labeling f(g, {0, 1, 2, 3, 4, 5, 6, 7, 8});  // row-major by y
    LabelingDocument doc = LabelingDocument::from_labeling(g, optimal_labeling(g));
    doc.labels_by_index = f.raw();
    doc.span = 8;
    const std::string text = to_ascii(doc);
    CHECK(text == "6 7 8\n3 4 5\n0 1 2\n");
}

TEST_CASE("ascii agrees with json content") {
    GridGraph g(6, 6);
    const LabelingDocument doc = LabelingDocument::from_labeling(g, optimal_labeling(g));
    const LabelingDocument parsed = document_from_json(to_json(doc));
    std::istringstream rows(to_ascii(parsed));
    std::string line;
    for (int y = doc.b; y >= 1; --y) {
        REQUIRE(std::getline(rows, line));
        std::istringstream cells(line);
        for (int x = 1; x <= doc.a; ++x) {
            long long v;
            REQUIRE((cells >> v));
            CHECK(v == doc.labels_by_index[g.index_of(Vertex{x, y})]);
        }
    }
}

TEST_CASE("dot output pins positions and lists all grid edges") {
    GridGraph g(3, 4);
    const LabelingDocument doc = LabelingDocument::from_labeling(g, optimal_labeling(g));
    const std::string text = to_dot(doc);
    CHECK(text.find("graph") == 0);
    CHECK(text.find("pos=\"0,0!\"") != std::string::npos);
    size_t edges = 0;
    for (size_t p = text.find("--"); p != std::string::npos; p = text.find("--", p + 2))
        ++edges;
    CHECK(edges == static_cast<size_t>(2 * 3 * 4 - 3 - 4));  // 2ab - a - b
}

TEST_CASE("cli: label emits a verifiable document") {
    TempFile tf("label.json");
    std::string out;
    CHECK(run({"label", "--a", "6", "--b", "5", "--format", "json", "--out",
               tf.path.c_str()}, &out) == 0);
    std::string verdict;
    CHECK(run({"verify", tf.path.c_str()}, &verdict) == 0);
    CHECK(verdict == "VALID span=129\n");
}

TEST_CASE("cli: verify flags a corrupted document") {
    TempFile tf("bad.json");
    GridGraph g(3, 3);
    LabelingDocument doc = LabelingDocument::from_labeling(g, optimal_labeling(g));
    // decrement a non-extremal label: span metadata stays consistent
    for (auto& v : doc.labels_by_index)
        if (v == 7) v = 6;
    tf.write(to_json(doc));
    std::string out;
    CHECK(run({"verify", tf.path.c_str()}, &out) == 1);
    CHECK(out.find("violation") != std::string::npos);
}

TEST_CASE("cli: verify rejects a truncated file with exit 2") {
    TempFile tf("trunc.json");
    tf.write("{\"a\": 3, \"b\": 3, \"lab");
    std::string err;
    CHECK(run({"verify", tf.path.c_str()}, nullptr, &err) == 2);
}

TEST_CASE("cli: byte-stable output") {
    std::string one, two;
    CHECK(run({"label", "--a", "6", "--b", "6", "--format", "json"}, &one) == 0);
    CHECK(run({"label", "--a", "6", "--b", "6", "--format", "json"}, &two) == 0);
    CHECK(one == two);
}

TEST_CASE("cli: exit codes") {
    std::string err;
    CHECK(run({"rn", "--a", "2", "--b", "9"}, nullptr, &err) == 2);
    CHECK(err.find("a, b >= 3") != std::string::npos);
    CHECK(run({"oracle", "rn", "--a", "6", "--b", "6"}, nullptr, &err) == 3);
    CHECK(run({"label", "--a", "4", "--b", "4", "--format", "svg"}, nullptr, &err) == 2);
    CHECK(run({"nonsense"}, nullptr, &err) == 2);
}

TEST_CASE("cli: rn / tplus / analyze report the formulas") {
    std::string out;
    CHECK(run({"rn", "--a", "3", "--b", "3"}, &out) == 0);
    CHECK(out.find("rn = 17") != std::string::npos);
    CHECK(run({"rn", "--a", "6", "--b", "5"}, &out) == 0);
    CHECK(out.find("rn = 129") != std::string::npos);
    CHECK(run({"tplus", "--a", "4", "--b", "4"}, &out) == 0);
    CHECK(out.find("t_plus = 61") != std::string::npos);
    CHECK(run({"analyze", "--a", "5", "--b", "7"}, &out) == 0);
    CHECK(out.find("sum d_i = 203") != std::string::npos);
    CHECK(out.find("bump events: none") != std::string::npos);
    CHECK(run({"analyze", "--a", "6", "--b", "6"}, &out) == 0);
    CHECK(out.find("i=2 b=1") != std::string::npos);
    CHECK(out.find("i=34 b=1") != std::string::npos);
}

TEST_CASE("cli: oracle matches formulas and writes a witness") {
    TempFile tf("witness.json");
    std::string out;
    CHECK(run({"oracle", "tplus", "--a", "4", "--b", "4"}, &out) == 0);
    CHECK(out.find("value = 61") != std::string::npos);
    CHECK(out.find("verdict: MATCH") != std::string::npos);
    CHECK(run({"oracle", "rn", "--a", "3", "--b", "3", "--out", tf.path.c_str()}, &out) == 0);
    CHECK(out.find("value = 17") != std::string::npos);
    std::string verdict;
    CHECK(run({"verify", tf.path.c_str()}, &verdict) == 0);
    CHECK(verdict.find("VALID") == 0);
}
