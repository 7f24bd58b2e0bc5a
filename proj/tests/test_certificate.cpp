#include <doctest.h>

#include "bipow/certificate.hpp"

using namespace bipow;

TEST_CASE("fnv1a_hex") {
    CHECK(fnv1a_hex("") == "cbf29ce484222325");
    CHECK(fnv1a_hex("a") != fnv1a_hex("b"));
    CHECK(fnv1a_hex("double-ray 1 2") == fnv1a_hex("double-ray 1 2"));
}

TEST_CASE("certificates pass and recheck for the built-in families") {
    struct Case {
        const char* family;
        std::vector<int> schedule;
    };
    for (const Case& c : {Case{"double-ray", {1, 2, 3, 4}}, Case{"ladder", {1, 2, 3}},
                          Case{"matched-tree", {1, 2, 3}}}) {
        CAPTURE(c.family);
        Certificate cert = infinite_certificate(family_by_name(c.family), c.schedule);
        CHECK(cert.pass);
        CHECK(cert.doc.at("pass").get<bool>());
        CHECK(cert.doc.at("failures").empty());
        CHECK(cert.doc.at("limit_graph").at("cut_bound").get<int>() <= 3);
        CHECK(cert.doc.at("stabilization").at("all_nonempty").get<bool>());
        CHECK(cert.doc.at("faithfulness").at("pass").get<bool>());
        Report r = recheck(cert.doc);
        CHECK(r.pass);
        if (!r.pass) CAPTURE(r.failures.front());
    }
}

TEST_CASE("certificate is deterministic") {
    Certificate a = infinite_certificate(double_ray(), {1, 2, 3});
    Certificate b = infinite_certificate(double_ray(), {1, 2, 3});
    CHECK(a.doc == b.doc);
}

TEST_CASE("recheck rejects tampered certificates") {
    Certificate cert = infinite_certificate(double_ray(), {1, 2, 3});
    REQUIRE(cert.pass);

    SUBCASE("wrong kind") {
        nlohmann::json doc = cert.doc;
        doc["kind"] = "something-else";
        CHECK(!recheck(doc).pass);
    }
    SUBCASE("hash mismatch") {
        nlohmann::json doc = cert.doc;
        doc["schedule"] = {1, 2, 3, 4};
        CHECK(!recheck(doc).pass);
    }
    SUBCASE("tampered cycle") {
        nlohmann::json doc = cert.doc;
        auto& cy = doc["steps"][1]["cycle"];
        std::swap(cy[0], cy[1]);
        CHECK(!recheck(doc).pass);
    }
    SUBCASE("tampered tree edge") {
        nlohmann::json doc = cert.doc;
        doc["steps"][1]["tree_edges"].erase(0);
        CHECK(!recheck(doc).pass);
    }
    SUBCASE("tampered stabilization heads") {
        nlohmann::json doc = cert.doc;
        doc["stabilization"]["heads"][0] = 1;
        CHECK(!recheck(doc).pass);
    }
    SUBCASE("tampered limit graph") {
        nlohmann::json doc = cert.doc;
        doc["limit_graph"]["edges"].erase(0);
        CHECK(!recheck(doc).pass);
    }
    SUBCASE("tampered cut bound") {
        nlohmann::json doc = cert.doc;
        doc["limit_graph"]["cut_bound"] = 1;
        CHECK(!recheck(doc).pass);
    }
    SUBCASE("tampered verdict") {
        nlohmann::json doc = cert.doc;
        doc["pass"] = false;
        CHECK(!recheck(doc).pass);  // claims all hold, verdict says failed
    }
}

TEST_CASE("certificate survives a JSON round trip") {
    Certificate cert = infinite_certificate(ladder(), {1, 2, 3});
    nlohmann::json parsed = nlohmann::json::parse(cert.doc.dump());
    CHECK(recheck(parsed).pass);
}
