#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "qsent/error.hpp"
#include "qsent/io.hpp"
#include "qsent/sampler.hpp"
#include "support/generators.hpp"

using namespace qsent;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::NonSquare;
}

} // namespace

TEST_CASE("matrix round trip is exact") {
    Rng rng(9);
    const ComplexMatrix m = testing::random_matrix(3, 5, rng);
    const ComplexMatrix back = matrix_from_json(matrix_to_json(m));
    CHECK(back.rows() == 3);
    CHECK(back.cols() == 5);
    CHECK(max_abs_diff(m, back) == 0.0);
}

TEST_CASE("matrix layout is row-major") {
    const auto m = matrix_from_json(R"({"rows": 2, "cols": 2, "re": [1, 2, 3, 4], "im": [0, 0, 0, -1]})");
    CHECK(m(0, 1).real() == 2.0);
    CHECK(m(1, 0).real() == 3.0);
    CHECK(m(1, 1).imag() == -1.0);
}

TEST_CASE("channel round trip") {
    const auto ch = sample({3, 4, 5, ChannelFamily::Cptp, {}, 0.0});
    const auto back = channel_from_json(channel_to_json(ch));
    REQUIRE(back.kraus_count() == ch.kraus_count());
    for (std::size_t i = 0; i < ch.kraus_count(); ++i)
        CHECK(max_abs_diff(ch.kraus_ops()[i], back.kraus_ops()[i]) == 0.0);

    const auto path = std::filesystem::temp_directory_path() / "qsent-test-io-channel.json";
    save_channel(path, ch);
    CHECK(load_channel(path).kraus_count() == ch.kraus_count());
    std::filesystem::remove(path);
}

TEST_CASE("parse errors") {
    CHECK(code_of([] { matrix_from_json("{"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { matrix_from_json(R"({"rows": 2, "cols": 2, "re": [1, 2, 3]})"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { matrix_from_json(R"({"rows": 1, "cols": 2, "re": [1, 2], "im": [0]})"); }) ==
          ErrorCode::ParseError);
    CHECK(code_of([] { channel_from_json(R"({"dim": 2})"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { load_matrix("/nonexistent/qsent.json"); }) == ErrorCode::ParseError);
    // Well-formed JSON that is not a channel fails channel validation.
    CHECK(code_of([] {
              channel_from_json(R"({"dim": 2, "kraus": [{"rows": 2, "cols": 2, "re": [1, 0, 0, 0], "im": [0, 0, 0, 0]}]})");
          }) == ErrorCode::NotTracePreserving);
}
